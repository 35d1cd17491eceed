#include "doctest.h"

#include "tube/errors.hpp"
#include "tube/json_io.hpp"
#include "tube/render.hpp"
#include "tube/torsion.hpp"

#include <regex>
#include <set>
#include <sstream>

using namespace tube;

namespace {

PeriodicDiagram example10() {
  return PeriodicDiagram(10, std::vector<Arc>{{8, 12}, {8, 11}, {9, 11}, {3, 6}, {3, 5}, {4, 6}, {6, 8}});
}

std::set<std::string> boxed_labels(const std::string& svg) {
  static const std::regex re(R"re(<rect class="boxed" data-label="([^"]*)")re");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.insert((*it)[1].str());
  }
  return out;
}

}  // namespace

TEST_CASE("periodic diagram JSON round trip") {
  for (int n = 1; n <= 5; ++n) {
    for (const PeriodicDiagram& x : enumerate_structured(n)) {
      const std::string s = io::dump(io::to_json(x));
      CHECK(io::periodic_from_json(io::parse(s)) == x);
      CHECK(io::dump(io::to_json(io::periodic_from_json(io::parse(s)))) == s);
    }
  }
  CHECK(io::dump(io::to_json(PeriodicDiagram(2, std::vector<Arc>{{0, 2}}))) == R"({"rank":2,"orbits":[[0,2]]})");
}

TEST_CASE("polygon and pair JSON round trip") {
  for (int m = 1; m <= 5; ++m) {
    for (const PolygonDiagram& p : enumerate_polygon(m)) CHECK(io::polygon_from_json(io::to_json(p)) == p);
  }
  for (const TorsionPair& t : torsion_pairs(enumerate_structured(4))) {
    CHECK(io::pair_from_json(io::parse(io::dump(io::to_json(t)))) == t);
  }
}

TEST_CASE("wing decomposition JSON for the rank 10 example") {
  const WingDecomposition w = decompose(example10());
  const std::string s = io::dump(io::to_json(w, Side::Left));
  CHECK(s ==
        R"({"rank":10,"finite_side":"left","pairs":[{"top":[2,3],"arcs":[]},{"top":[3,6],"arcs":[[3,5],[3,6],[4,6]]},)"
        R"({"top":[6,8],"arcs":[[6,8]]},{"top":[8,12],"arcs":[[8,11],[8,12],[9,11]]}]})");
  const io::SidedDecomposition back = io::decomposition_from_json(io::parse(s));
  CHECK(back.wings == w);
  REQUIRE(back.side.has_value());
  CHECK(*back.side == Side::Left);
  CHECK_FALSE(io::decomposition_from_json(io::to_json(w)).side.has_value());
}

TEST_CASE("decomposition JSON round trips, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const PeriodicDiagram& x : enumerate_structured(n)) {
      const WingDecomposition w = decompose(x);
      CHECK(io::decomposition_from_json(io::parse(io::dump(io::to_json(w)))).wings == w);
    }
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(io::parse("{"), InputError);
  CHECK_THROWS_AS(io::parse("[1,2"), InputError);
  const char* bad_periodic[] = {
      R"({"rank":2})",
      R"({"rank":0,"orbits":[]})",
      R"({"rank":2,"orbits":[[0,1]]})",
      R"({"rank":2,"orbits":[[0]]})",
      R"({"rank":"2","orbits":[]})",
      R"({"rank":2,"orbits":[],"extra":1})",
      R"([2])",
  };
  for (const char* s : bad_periodic) {
    CAPTURE(s);
    CHECK_THROWS_AS(io::periodic_from_json(io::parse(s)), InputError);
  }
  // Not a finite half: an orbit longer than the rank.
  CHECK_THROWS_AS(io::pair_from_json(io::parse(R"({"rank":2,"finite_side":"left","orbits":[[0,3]]})")), InputError);
  CHECK_THROWS_AS(io::pair_from_json(io::parse(R"({"rank":2,"finite_side":"up","orbits":[]})")), InputError);
  CHECK_THROWS_AS(io::polygon_from_json(io::parse(R"({"size":3,"diagonals":[[0,3]]})")), InputError);
  CHECK_THROWS_AS(io::decomposition_from_json(io::parse(R"({"rank":2,"pairs":[{"top":null,"arcs":[]}]})")),
                  InputError);
  // Tops that do not tile one period.
  CHECK_THROWS_AS(io::decomposition_from_json(io::parse(R"({"rank":3,"pairs":[{"top":[0,2],"arcs":[[0,2]]}]})")),
                  InputError);
}

TEST_CASE("count CSV") {
  std::ostringstream os;
  io::write_count_csv(os, 2, refined_table(2));
  const std::string s = os.str();
  CHECK(s.rfind("n,k,l,m,count\n", 0) == 0);
  CHECK(s.find("2,0,0,0,2\n") != std::string::npos);
  CHECK(s.find("2,1,0,0,4\n") != std::string::npos);
}

TEST_CASE("sieve report JSON carries big integers as strings") {
  const io::Json j = io::to_json(csp_verify(2));
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  CHECK(j[0]["polyValue"].is_string());
  CHECK(j[0]["match"].is_boolean());
}

TEST_CASE("SVG of the rank 10 example boxes exactly its arcs") {
  const std::string svg = render_svg(TorsionPair{example10(), Side::Left});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(boxed_labels(svg) == std::set<std::string>{"82", "36", "35", "46", "68", "81", "91"});
  CHECK(svg == render_svg(TorsionPair{example10(), Side::Left}));
}

TEST_CASE("SVG edge cases") {
  const std::string empty = render_svg(TorsionPair{PeriodicDiagram(3), Side::Right});
  CHECK(boxed_labels(empty).empty());
  CHECK(empty.find("</svg>") != std::string::npos);
  const std::string two = render_svg(TorsionPair{PeriodicDiagram(2, std::vector<Arc>{{0, 2}}), Side::Left});
  CHECK(boxed_labels(two) == std::set<std::string>{"00"});
  CHECK(vertex_label({3, 15}, 12) == "3,3");
  CHECK(vertex_label({8, 12}, 10) == "82");
}
