#pragma once

// Ptolemy diagrams on an (m+1)-gon with a distinguished base edge. Vertices
// are labelled 0..m clockwise from the base vertex; the base edge is (0, m).

#include "tube/kernels/subset_filter.hpp"

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

namespace tube {

struct Diagonal {
  int a = 0;
  int b = 0;
  friend constexpr auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Default largest size accepted by enumerate_polygon().
inline constexpr int kPolygonCap = 10;
/// Default largest size accepted by enumerate_polygon_exhaustive().
inline constexpr int kPolygonExhaustiveCap = 8;

class PolygonDiagram {
 public:
  /// Size 1 is the degenerate diagram: two vertices and the base edge.
  explicit PolygonDiagram(int size = 1);
  PolygonDiagram(int size, std::vector<Diagonal> diagonals);

  int size() const { return size_; }
  bool degenerate() const { return size_ == 1; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  bool has_diagonal(int a, int b) const;
  /// Diagonal, polygon side, or the base edge.
  bool has_edge(int a, int b) const;

  friend bool operator==(const PolygonDiagram&, const PolygonDiagram&) = default;
  friend auto operator<=>(const PolygonDiagram& x, const PolygonDiagram& y) {
    if (auto c = x.size_ <=> y.size_; c != 0) return c;
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  int size_;
  std::vector<Diagonal> diagonals_;
};

enum class CellKind { Triangle, Clique, EmptyCell };

std::string_view cell_kind_name(CellKind kind);

struct Cell {
  std::vector<int> vertices;  // increasing, i.e. clockwise
  CellKind kind = CellKind::Triangle;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Numbers of triangles, cliques and empty cells.
struct CellStatistics {
  int triangles = 0;
  int cliques = 0;
  int empty_cells = 0;

  CellStatistics& operator+=(const CellStatistics& o) {
    triangles += o.triangles;
    cliques += o.cliques;
    empty_cells += o.empty_cells;
    return *this;
  }
  friend CellStatistics operator+(CellStatistics a, const CellStatistics& b) { return a += b; }
  friend constexpr auto operator<=>(const CellStatistics&, const CellStatistics&) = default;
};

/// Every possible diagonal of the size-m polygon, in lexicographic order.
/// The index of a diagonal in this list is its bit in subset masks.
std::vector<Diagonal> all_diagonals(int m);

/// The Ptolemy condition as implications over the bits of all_diagonals(m).
kernels::ImplicationSet polygon_implications(int m);

bool is_ptolemy_polygon(const PolygonDiagram& p);

/// All Ptolemy diagrams of size m, sorted. Exhaustive search over diagonal
/// subsets that abandons a partial subset once it violates a decided
/// implication.
std::vector<PolygonDiagram> enumerate_polygon(int m, int cap = kPolygonCap);

/// Same result by scanning all 2^d diagonal subsets with the subset-filter
/// kernel. Only practical for small m.
std::vector<PolygonDiagram> enumerate_polygon_exhaustive(int m, int cap = kPolygonExhaustiveCap);

/// Faces of the subdivision by the diagonals no other diagonal crosses,
/// classified. Throws std::logic_error on a face that is neither a clique nor
/// an empty cell.
std::vector<Cell> cells(const PolygonDiagram& p);

CellStatistics statistics_polygon(const PolygonDiagram& p);

/// The cell on the base edge together with the diagrams glued onto its other
/// sides, each re-rooted on that side.
struct BaseDecomposition {
  std::optional<Cell> base;  // empty for the degenerate diagram
  std::vector<PolygonDiagram> glued;
};

BaseDecomposition decompose_base(const PolygonDiagram& p);

/// Inverse of decompose_base().
PolygonDiagram assemble(const BaseDecomposition& d);
PolygonDiagram assemble(CellKind kind, const std::vector<PolygonDiagram>& glued);

/// Statistics summed along the decompose_base() recursion.
CellStatistics recursive_statistics(const PolygonDiagram& p);

/// Bitmask over all_diagonals(size) of the diagram's diagonals.
std::uint64_t diagonal_mask(const PolygonDiagram& p);
PolygonDiagram from_diagonal_mask(int m, std::uint64_t mask);

}  // namespace tube
