#pragma once

// Arc calculus of the infinity-gon and its n-periodic quotient, which models
// the indecomposable objects of the cluster tube of rank n.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tube {

/// An arc (i, j) of the infinity-gon. Valid arcs have j - i >= 2.
struct Arc {
  int i = 0;
  int j = 0;

  constexpr int length() const { return j - i; }
  constexpr bool valid() const { return j - i >= 2; }
  constexpr Arc shifted(int by) const { return {i + by, j + by}; }

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// True iff the endpoints of a and b strictly interleave.
constexpr bool cross(const Arc& a, const Arc& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) ||
         (b.i < a.i && a.i < b.j && b.j < a.j);
}

/// The four Ptolemy completion pairs for crossing arcs a, b, taken with the
/// left endpoint order. Entries may have length < 2 and then are not arcs.
std::array<Arc, 4> ptolemy_completions(const Arc& a, const Arc& b);

/// Number of shifts by multiples of n to either side that can bring an arc
/// of length len_b into a crossing with an arc of length len_a.
int shift_window(int len_a, int len_b, int rank);

/// The class of an arc under the shift by n vertices. The representative
/// always has its left endpoint in [0, rank).
class ArcOrbit {
 public:
  ArcOrbit() = default;
  ArcOrbit(int rank, Arc arc);

  int rank() const { return rank_; }
  const Arc& rep() const { return rep_; }
  int length() const { return rep_.length(); }
  int level() const { return rep_.length() - 1; }

  /// Does the arc belong to this class?
  bool contains(const Arc& a) const;

  friend bool operator==(const ArcOrbit&, const ArcOrbit&) = default;
  /// Serialization order: (length, left endpoint).
  friend std::strong_ordering operator<=>(const ArcOrbit& a, const ArcOrbit& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.rep_.i <=> b.rep_.i;
  }

 private:
  int rank_ = 1;
  Arc rep_{0, 2};
};

/// Euclidean remainder in [0, n).
constexpr int mod_floor(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

/// A finite set of arc orbits of one rank, i.e. a subcategory of C_n with
/// finitely many indecomposables. Kept sorted and free of duplicates.
class PeriodicDiagram {
 public:
  explicit PeriodicDiagram(int rank = 1);
  PeriodicDiagram(int rank, const std::vector<Arc>& arcs);
  PeriodicDiagram(int rank, std::vector<ArcOrbit> orbits);

  int rank() const { return rank_; }
  const std::vector<ArcOrbit>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }
  bool empty() const { return orbits_.empty(); }
  int max_length() const;

  bool contains(const ArcOrbit& o) const;
  /// Membership of an arbitrary arc of the infinity-gon (via its orbit).
  bool contains(const Arc& a) const;

  friend bool operator==(const PeriodicDiagram&, const PeriodicDiagram&) = default;
  friend auto operator<=>(const PeriodicDiagram& a, const PeriodicDiagram& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.orbits_ <=> b.orbits_;
  }

 private:
  int rank_;
  std::vector<ArcOrbit> orbits_;
};

/// Some shift of B's representative crosses A's representative.
bool orbits_cross(const ArcOrbit& a, const ArcOrbit& b);

/// dim Ext^1 between the objects of two orbits, counted as I+ + I-.
int ext1_dim(const ArcOrbit& a, const ArcOrbit& b);

/// ext1_dim(a, a) == 0, i.e. length <= rank.
bool is_rigid(const ArcOrbit& a);

/// Membership oracle for nc X: the arcs crossing no arc of X.
bool nc_contains(const PeriodicDiagram& x, const Arc& a);

/// All orbits of length in [2, max_len] lying in nc X.
PeriodicDiagram nc_enumerate(const PeriodicDiagram& x, int max_len);

/// Ptolemy condition on the n-periodic arc collection described by x.
bool is_ptolemy(const PeriodicDiagram& x);

/// Ptolemy condition ignoring completions longer than max_len. Used for
/// truncations of infinite diagrams.
bool is_ptolemy_bounded(const PeriodicDiagram& x, int max_len);

/// AR translation (i, j) -> (i - 1, j - 1), applied `times` times.
PeriodicDiagram tau(const PeriodicDiagram& x, int times = 1);

/// Every orbit of the given rank with length in [2, max_len], in canonical order.
std::vector<ArcOrbit> all_orbits(int rank, int max_len);

}  // namespace tube
