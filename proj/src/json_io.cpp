#include "tube/json_io.hpp"

#include "tube/errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>

namespace tube::io {

namespace {

void require_object(const Json& j, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  for (const char* key : required) {
    if (!j.contains(key)) throw InputError(std::string(what) + ": missing key \"" + key + "\"");
  }
  for (const auto& [key, value] : j.items()) {
    const auto known = [&key](std::initializer_list<const char*> keys) {
      return std::any_of(keys.begin(), keys.end(), [&key](const char* k) { return key == k; });
    };
    if (!known(required) && !known(optional)) {
      throw InputError(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
}

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw InputError(std::string(what) + ": integer out of range");
  return static_cast<int>(v);
}

int get_rank(const Json& j) {
  const int n = get_int(j, "rank");
  if (n < 1) throw InputError("rank must be positive");
  return n;
}

std::pair<int, int> get_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw InputError(std::string(what) + ": expected [a, b]");
  return {get_int(j[0], what), get_int(j[1], what)};
}

const Json& get_array(const Json& j, const char* key) {
  const Json& a = j.at(key);
  if (!a.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return a;
}

Json arc_json(const Arc& a) { return Json::array({a.i, a.j}); }

std::string big(const BigInt& v) { return v.str(); }

Side get_side(const Json& j) {
  if (j == "left") return Side::Left;
  if (j == "right") return Side::Right;
  throw InputError("finite_side must be \"left\" or \"right\"");
}

// Converts library argument errors raised while building values from
// otherwise well-formed JSON.
template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Json to_json(const PeriodicDiagram& x) {
  Json orbits = Json::array();
  for (const ArcOrbit& o : x.orbits()) orbits.push_back(arc_json(o.rep()));
  Json j;
  j["rank"] = x.rank();
  j["orbits"] = std::move(orbits);
  return j;
}

Json to_json(const PolygonDiagram& p) {
  Json diagonals = Json::array();
  for (const Diagonal& d : p.diagonals()) diagonals.push_back(Json::array({d.a, d.b}));
  Json j;
  j["size"] = p.size();
  j["diagonals"] = std::move(diagonals);
  return j;
}

Json to_json(const TorsionPair& pair) {
  Json orbits = Json::array();
  for (const ArcOrbit& o : pair.finite_half.orbits()) orbits.push_back(arc_json(o.rep()));
  Json j;
  j["rank"] = pair.rank();
  j["finite_side"] = std::string(side_name(pair.finite_side));
  j["orbits"] = std::move(orbits);
  return j;
}

Json to_json(const WingDecomposition& w, std::optional<Side> side) {
  Json pairs = Json::array();
  for (std::size_t k = 0; k < w.cuts().size(); ++k) {
    const int lo = w.cuts()[k];
    const PolygonDiagram& piece = w.pieces()[k];
    std::vector<Arc> arcs;
    if (!piece.degenerate()) {
      arcs.push_back({lo, lo + piece.size()});
      for (const Diagonal& d : piece.diagonals()) arcs.push_back({lo + d.a, lo + d.b});
    }
    std::sort(arcs.begin(), arcs.end());
    Json a = Json::array();
    for (const Arc& arc : arcs) a.push_back(arc_json(arc));
    Json p;
    p["top"] = Json::array({lo, lo + piece.size()});
    p["arcs"] = std::move(a);
    pairs.push_back(std::move(p));
  }
  Json j;
  j["rank"] = w.rank();
  if (side) j["finite_side"] = std::string(side_name(*side));
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const SieveReport& report) {
  Json entries = Json::array();
  for (const SieveEntry& e : report.entries) {
    Json r;
    r["n"] = e.n;
    r["d"] = e.d;
    r["k"] = e.k;
    r["l"] = e.l;
    r["m"] = e.m;
    r["polyValue"] = big(e.poly_value);
    r["fixedCount"] = big(e.fixed_count);
    r["formula"] = big(e.formula);
    r["match"] = e.match;
    entries.push_back(std::move(r));
  }
  return entries;
}

PeriodicDiagram periodic_from_json(const Json& j) {
  require_object(j, {"rank", "orbits"}, {}, "diagram");
  const int n = get_rank(j.at("rank"));
  std::vector<Arc> arcs;
  for (const Json& a : get_array(j, "orbits")) {
    const auto [i, k] = get_pair(a, "orbit");
    arcs.push_back({i, k});
  }
  return guarded([&] { return PeriodicDiagram(n, arcs); });
}

PolygonDiagram polygon_from_json(const Json& j) {
  require_object(j, {"size", "diagonals"}, {}, "polygon");
  const int m = get_int(j.at("size"), "size");
  std::vector<Diagonal> diagonals;
  for (const Json& d : get_array(j, "diagonals")) {
    const auto [a, b] = get_pair(d, "diagonal");
    diagonals.push_back({a, b});
  }
  return guarded([&] { return PolygonDiagram(m, std::move(diagonals)); });
}

TorsionPair pair_from_json(const Json& j) {
  require_object(j, {"rank", "finite_side", "orbits"}, {}, "torsion pair");
  Json diagram;
  diagram["rank"] = j.at("rank");
  diagram["orbits"] = j.at("orbits");
  TorsionPair pair{periodic_from_json(diagram), get_side(j.at("finite_side"))};
  if (!is_finite_half(pair.finite_half)) {
    throw InputError("orbits do not form a finite half (Ptolemy, lengths at most the rank)");
  }
  return pair;
}

SidedDecomposition decomposition_from_json(const Json& j) {
  require_object(j, {"rank", "pairs"}, {"finite_side"}, "wing decomposition");
  const int n = get_rank(j.at("rank"));
  std::optional<Side> side;
  if (j.contains("finite_side")) side = get_side(j.at("finite_side"));

  struct Span {
    int lo;
    int hi;
    std::vector<Arc> arcs;
  };
  std::vector<Span> spans;
  for (const Json& p : get_array(j, "pairs")) {
    require_object(p, {"top", "arcs"}, {}, "wing");
    if (p.at("top").is_null()) throw InputError("wing: \"top\" must be an interval [i, j]");
    const auto [lo, hi] = get_pair(p.at("top"), "top");
    if (hi <= lo || hi - lo > n) throw InputError("wing: top interval must have length in [1, rank]");
    // Normalize so the interval starts in [0, n).
    const int shift = mod_floor(lo, n) - lo;
    Span s{lo + shift, hi + shift, {}};
    for (const Json& a : get_array(p, "arcs")) {
      const auto [i, k] = get_pair(a, "arc");
      s.arcs.push_back({i + shift, k + shift});
    }
    spans.push_back(std::move(s));
  }
  if (spans.empty()) throw InputError("wing decomposition needs at least one pair");
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });

  std::vector<int> cuts;
  std::vector<PolygonDiagram> pieces;
  for (std::size_t k = 0; k < spans.size(); ++k) {
    const Span& s = spans[k];
    const int next = k + 1 < spans.size() ? spans[k + 1].lo : spans.front().lo + n;
    if (s.hi != next) throw InputError("wing tops must tile one period without gaps or overlaps");
    const int g = s.hi - s.lo;
    std::vector<Diagonal> diagonals;
    bool has_top = false;
    for (const Arc& a : s.arcs) {
      if (!a.valid() || a.i < s.lo || a.j > s.hi) {
        throw InputError("wing arc (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                         ") is invalid or outside its top interval");
      }
      if (a.i == s.lo && a.j == s.hi) {
        has_top = true;
      } else {
        diagonals.push_back({a.i - s.lo, a.j - s.lo});
      }
    }
    if (g >= 2 && !has_top) throw InputError("wing of length at least 2 must contain its top arc");
    cuts.push_back(s.lo);
    pieces.push_back(guarded([&] { return PolygonDiagram(g, std::move(diagonals)); }));
  }
  return {guarded([&] { return WingDecomposition(n, std::move(cuts), std::move(pieces)); }), side};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

void write_count_csv(std::ostream& os, int n, const std::map<CellStatistics, BigInt>& table) {
  os << "n,k,l,m,count\n";
  for (const auto& [s, c] : table) {
    os << n << ',' << s.triangles << ',' << s.cliques << ',' << s.empty_cells << ',' << c << '\n';
  }
}

Json count_table_json(int n, const std::map<CellStatistics, BigInt>& table) {
  Json rows = Json::array();
  for (const auto& [s, c] : table) {
    Json r;
    r["n"] = n;
    r["k"] = s.triangles;
    r["l"] = s.cliques;
    r["m"] = s.empty_cells;
    r["count"] = big(c);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace tube::io
