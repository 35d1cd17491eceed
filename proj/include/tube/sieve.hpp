#pragma once

// Cyclic sieving check for refined torsion pair counts under tau.

#include "tube/bigint.hpp"
#include "tube/qpoly.hpp"

#include <vector>

namespace tube {

/// 2 [n-1+k+l+m; n-1, k, l, m]_q [n-1-k-l-m; l+m]_q
QPoly torsion_qcount(int n, int k, int l, int m);

struct SieveEntry {
  int n = 0;
  int d = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  BigInt poly_value;   // T_{n,k,l,m}(q) at a primitive d-th root of unity
  BigInt fixed_count;  // torsion pairs with these statistics fixed by tau^(n/d)
  BigInt formula;      // T_{n/d,k/d,l/d,m/d}, zero when d does not divide k, l, m
  bool match = false;
};

struct SieveReport {
  std::vector<SieveEntry> entries;
  bool all_match = true;
};

/// Every d | n and every (k, l, m) with a nonzero count at rank n. Fixed
/// counts come from direct enumeration of finite halves at rank n.
SieveReport csp_verify(int n, int structured_cap = 9);

}  // namespace tube
