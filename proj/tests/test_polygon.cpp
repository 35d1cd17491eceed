#include "doctest.h"
#include "oracles.hpp"

#include "tube/errors.hpp"
#include "tube/polygon.hpp"
#include "tube/series.hpp"

#include <set>

using namespace tube;

namespace {

std::set<std::pair<int, int>> diag_set(const PolygonDiagram& p) {
  std::set<std::pair<int, int>> s;
  for (const Diagonal& d : p.diagonals()) s.insert({d.a, d.b});
  return s;
}

CellStatistics stats(int k, int l, int m) { return {k, l, m}; }

}  // namespace

TEST_CASE("PolygonDiagram validation") {
  CHECK(PolygonDiagram(1).degenerate());
  CHECK_THROWS_AS(PolygonDiagram(0), std::invalid_argument);
  CHECK_THROWS_AS(PolygonDiagram(3, {{0, 3}}), std::invalid_argument);  // the base edge
  CHECK_THROWS_AS(PolygonDiagram(3, {{0, 1}}), std::invalid_argument);  // a side
  CHECK_THROWS_AS(PolygonDiagram(3, {{1, 4}}), std::invalid_argument);
  const PolygonDiagram p(4, {{2, 4}, {0, 2}, {0, 2}});
  REQUIRE(p.diagonals().size() == 2);
  CHECK(p.diagonals()[0].a == 0);
  CHECK(p.has_edge(0, 4));
  CHECK(p.has_edge(3, 4));
  CHECK(p.has_edge(4, 2));
  CHECK_FALSE(p.has_edge(1, 3));
}

TEST_CASE("is_ptolemy_polygon examples") {
  CHECK(is_ptolemy_polygon(PolygonDiagram(3)));
  CHECK(is_ptolemy_polygon(PolygonDiagram(3, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_ptolemy_polygon(PolygonDiagram(4, {{0, 2}, {1, 3}})));
}

TEST_CASE("polygon counts by exhaustive scan: 1, 1, 4, 17, 82") {
  const std::size_t expected[] = {1, 1, 4, 17, 82};
  for (int m = 1; m <= 5; ++m) {
    CHECK(enumerate_polygon_exhaustive(m).size() == expected[m - 1]);
    CHECK(oracle::polygon_count(m) == expected[m - 1]);
  }
}

TEST_CASE("pruned and exhaustive polygon enumeration agree, m <= 7") {
  for (int m = 1; m <= 7; ++m) {
    const auto pruned = enumerate_polygon(m);
    CHECK(pruned == enumerate_polygon_exhaustive(m));
    for (const PolygonDiagram& p : pruned) CHECK(oracle::polygon_ptolemy(diag_set(p), m));
  }
  CHECK(oracle::polygon_count(6) == enumerate_polygon(6).size());
}

TEST_CASE("polygon counts match series_P at x = y1 = y2 = 1, m <= 8") {
  const SeriesPoly p = series_P(8, CellWeights::all_ones());
  for (int m = 1; m <= 8; ++m) CHECK(BigInt(enumerate_polygon(m).size()) == p[m].coefficient({}));
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_polygon(kPolygonCap + 1), CapExceeded);
  CHECK_THROWS_AS(enumerate_polygon_exhaustive(kPolygonExhaustiveCap + 1), CapExceeded);
  CHECK_THROWS_AS(enumerate_polygon(4, 3), CapExceeded);
}

TEST_CASE("cells examples") {
  const auto two = cells(PolygonDiagram(3, {{0, 2}}));
  REQUIRE(two.size() == 2);
  std::set<std::vector<int>> verts;
  for (const Cell& c : two) {
    CHECK(c.kind == CellKind::Triangle);
    verts.insert(c.vertices);
  }
  CHECK(verts == std::set<std::vector<int>>{{0, 1, 2}, {0, 2, 3}});

  const auto empty = cells(PolygonDiagram(3));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].kind == CellKind::EmptyCell);
  CHECK(empty[0].vertices == std::vector<int>{0, 1, 2, 3});

  const auto clique = cells(PolygonDiagram(3, {{0, 2}, {1, 3}}));
  REQUIRE(clique.size() == 1);
  CHECK(clique[0].kind == CellKind::Clique);
  CHECK(clique[0].vertices == std::vector<int>{0, 1, 2, 3});

  CHECK(cells(PolygonDiagram(1)).empty());
  CHECK_THROWS_AS(cells(PolygonDiagram(4, {{0, 2}, {1, 3}})), std::logic_error);
}

TEST_CASE("statistics_polygon examples") {
  CHECK(statistics_polygon(PolygonDiagram(1)) == stats(0, 0, 0));
  CHECK(statistics_polygon(PolygonDiagram(2)) == stats(1, 0, 0));
  CHECK(statistics_polygon(PolygonDiagram(3, {{1, 3}})) == stats(2, 0, 0));
}

TEST_CASE("statistics generating polynomial equals series_P, m <= 6") {
  const SeriesPoly p = series_P(6);
  for (int m = 1; m <= 6; ++m) {
    MultiPoly sum;
    for (const PolygonDiagram& d : enumerate_polygon(m)) {
      const CellStatistics s = statistics_polygon(d);
      sum += MultiPoly::term(1, {s.triangles, s.cliques, s.empty_cells});
    }
    CHECK(sum == p[m]);
  }
}

TEST_CASE("no mixed faces and cell sanity, m <= 7") {
  for (int m = 1; m <= 7; ++m) {
    for (const PolygonDiagram& p : enumerate_polygon(m)) {
      std::vector<Cell> cs;
      REQUIRE_NOTHROW(cs = cells(p));
      // Faces of a dissection of an (m+1)-gon: sum over faces of (size - 2) = m - 1.
      int excess = 0;
      for (const Cell& c : cs) {
        excess += static_cast<int>(c.vertices.size()) - 2;
        if (c.kind == CellKind::Triangle) CHECK(c.vertices.size() == 3);
        if (c.kind != CellKind::Triangle) CHECK(c.vertices.size() >= 4);
      }
      CHECK(excess == (m == 1 ? 0 : m - 1));
    }
  }
}

TEST_CASE("a diagonal is crossed iff it lies inside a clique") {
  for (int m = 3; m <= 7; ++m) {
    for (const PolygonDiagram& p : enumerate_polygon(m)) {
      const auto cs = cells(p);
      for (const Diagonal& d : p.diagonals()) {
        bool crossed = false;
        for (const Diagonal& e : p.diagonals()) {
          crossed = crossed || (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
        }
        bool inside_clique = false;
        for (const Cell& c : cs) {
          if (c.kind != CellKind::Clique) continue;
          const auto pos = [&c](int v) {
            for (std::size_t k = 0; k < c.vertices.size(); ++k) {
              if (c.vertices[k] == v) return static_cast<int>(k);
            }
            return -1;
          };
          const int pa = pos(d.a);
          const int pb = pos(d.b);
          const int sz = static_cast<int>(c.vertices.size());
          if (pa >= 0 && pb >= 0 && pb - pa != 1 && !(pa == 0 && pb == sz - 1)) inside_clique = true;
        }
        CHECK(crossed == inside_clique);
      }
    }
  }
}

TEST_CASE("decompose_base examples") {
  const auto deg = decompose_base(PolygonDiagram(1));
  CHECK_FALSE(deg.base.has_value());
  CHECK(deg.glued.empty());

  const auto clique = decompose_base(PolygonDiagram(3, {{0, 2}, {1, 3}}));
  REQUIRE(clique.base.has_value());
  CHECK(clique.base->kind == CellKind::Clique);
  REQUIRE(clique.glued.size() == 3);
  for (const PolygonDiagram& g : clique.glued) CHECK(g.degenerate());

  const PolygonDiagram p(4, {{0, 2}});
  const auto d = decompose_base(p);
  REQUIRE(d.base.has_value());
  CHECK(d.base->kind == CellKind::EmptyCell);
  CHECK(d.base->vertices == std::vector<int>{0, 2, 3, 4});
  REQUIRE(d.glued.size() == 3);
  CHECK(d.glued[0] == PolygonDiagram(2));
  CHECK(d.glued[1].degenerate());
  CHECK(d.glued[2].degenerate());
  CHECK(assemble(d) == p);
}

TEST_CASE("decompose_base then assemble is the identity; the cases are exclusive, m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (const PolygonDiagram& p : enumerate_polygon(m)) {
      const BaseDecomposition d = decompose_base(p);
      CHECK(assemble(d) == p);
      CHECK(recursive_statistics(p) == statistics_polygon(p));
      if (!d.base) {
        CHECK(p.degenerate());
        continue;
      }
      int total = 0;
      for (const PolygonDiagram& g : d.glued) total += g.size();
      CHECK(total == m);
      if (d.base->kind == CellKind::Triangle) {
        CHECK(d.glued.size() == 2);
      } else {
        CHECK(d.glued.size() >= 3);
      }
    }
  }
  CHECK_THROWS_AS(assemble(CellKind::Triangle, {PolygonDiagram(1)}), std::invalid_argument);
  CHECK_THROWS_AS(assemble(CellKind::Clique, {PolygonDiagram(1), PolygonDiagram(1)}), std::invalid_argument);
}

TEST_CASE("diagonal masks round trip") {
  for (int m = 1; m <= 6; ++m) {
    for (const PolygonDiagram& p : enumerate_polygon(m)) CHECK(from_diagonal_mask(m, diagonal_mask(p)) == p);
  }
  CHECK(all_diagonals(3).size() == 2);
  CHECK(all_diagonals(5).size() == 9);
}

TEST_CASE("cell kind names") {
  CHECK(cell_kind_name(CellKind::Triangle) == "triangle");
  CHECK(cell_kind_name(CellKind::Clique) == "clique");
  CHECK(cell_kind_name(CellKind::EmptyCell) == "empty");
}
