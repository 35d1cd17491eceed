#pragma once

// Torsion pairs in the cluster tube C_n, stored by their finite half.

#include "tube/arc_model.hpp"
#include "tube/bigint.hpp"
#include "tube/polygon.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace tube {

inline constexpr int kBruteCap = 5;
inline constexpr int kStructuredCap = 9;

/// Which member of the pair is the finite one: Left means X, Right means X^perp.
enum class Side { Left, Right };

std::string_view side_name(Side side);

struct TorsionPair {
  PeriodicDiagram finite_half;
  Side finite_side = Side::Left;

  int rank() const { return finite_half.rank(); }
  friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
  friend auto operator<=>(const TorsionPair& a, const TorsionPair& b) {
    if (auto c = a.finite_half <=> b.finite_half; c != 0) return c;
    return a.finite_side <=> b.finite_side;
  }
};

/// Cut vertices i_1 < ... < i_r in [0, n) and one polygon per cyclic gap
/// g_k = i_{k+1} - i_k (i_{r+1} = i_1 + n). Gap-1 pieces are degenerate.
class WingDecomposition {
 public:
  WingDecomposition(int rank, std::vector<int> cuts, std::vector<PolygonDiagram> pieces);

  int rank() const { return rank_; }
  const std::vector<int>& cuts() const { return cuts_; }
  const std::vector<PolygonDiagram>& pieces() const { return pieces_; }
  int gap(std::size_t k) const;

  friend bool operator==(const WingDecomposition&, const WingDecomposition&) = default;

 private:
  int rank_;
  std::vector<int> cuts_;
  std::vector<PolygonDiagram> pieces_;
};

/// A cyclic sequence of polygon diagrams together with a marked non-base
/// vertex: the pointed_vertex-th vertex (1-based, clockwise after the base
/// vertex) of pieces[pointed_piece].
struct PointedCycle {
  std::vector<PolygonDiagram> pieces;
  std::size_t pointed_piece = 0;
  int pointed_vertex = 1;

  int total_size() const;
  friend bool operator==(const PointedCycle&, const PointedCycle&) = default;
};

/// Ptolemy, with every orbit of length at most the rank.
bool is_finite_half(const PeriodicDiagram& x);

/// Membership oracle for the (infinite) X^perp = Sigma nc X.
bool perp_contains(const PeriodicDiagram& x, const Arc& a);

/// Splits a finite half at the vertices no arc strictly overarches. Throws
/// std::invalid_argument when a span's top arc is missing.
WingDecomposition decompose(const PeriodicDiagram& x);
PeriodicDiagram compose(const WingDecomposition& w);

/// Vertex 0 of the infinity-gon carries the point.
PointedCycle to_pointed_cycle(const PeriodicDiagram& x);
PeriodicDiagram from_pointed_cycle(const PointedCycle& pc, int rank);

/// For each piece, the labels (vertex positions mod n) of its vertices,
/// base vertex first.
std::vector<std::vector<int>> cycle_vertex_labels(const PointedCycle& pc, int rank);

CellStatistics statistics(const PeriodicDiagram& x);

/// Every finite half, by scanning all subsets of the n(n-1) orbits of length
/// in [2, n] against the Ptolemy condition. Sorted.
std::vector<PeriodicDiagram> enumerate_brute(int n, int cap = kBruteCap);

/// Every finite half, by choosing a nonempty cut set and a polygon diagram
/// for each gap. Sorted.
std::vector<PeriodicDiagram> enumerate_structured(int n, int cap = kStructuredCap,
                                                  int polygon_cap = kPolygonCap);

/// Both torsion pairs for each finite half.
std::vector<TorsionPair> torsion_pairs(const std::vector<PeriodicDiagram>& halves);

/// The members of `halves` fixed by tau^d. d must divide the rank.
std::vector<PeriodicDiagram> fixed_under(const std::vector<PeriodicDiagram>& halves, int d);
/// Convenience: fixed_under(enumerate_structured(n), d).
std::vector<PeriodicDiagram> fixed_under(int n, int d);

/// Number of torsion pairs up to tau, by Cauchy-Frobenius over <tau>.
BigInt orbit_count(int n);
/// Refined by cell statistics.
std::map<CellStatistics, BigInt> orbit_count_refined(int n);

/// Orbit counts by partitioning the given torsion pairs into tau-orbits.
BigInt orbit_count_direct(const std::vector<PeriodicDiagram>& halves);
std::map<CellStatistics, BigInt> orbit_count_refined_direct(const std::vector<PeriodicDiagram>& halves);

}  // namespace tube
