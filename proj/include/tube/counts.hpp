#pragma once

// Closed-form torsion pair counts.

#include "tube/bigint.hpp"
#include "tube/polygon.hpp"

#include <map>

namespace tube {

/// Number of torsion pairs in C_n.
BigInt torsion_count(int n);

/// Number of torsion pairs in C_n whose finite half has k triangles,
/// l cliques and m empty cells. Zero for negative arguments.
BigInt torsion_count_refined(int n, int k, int l, int m);

/// All nonzero refined counts at rank n.
std::map<CellStatistics, BigInt> refined_table(int n);

long long euler_phi(long long n);

}  // namespace tube
