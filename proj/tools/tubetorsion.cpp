// tubetorsion: counting, enumeration and verification of torsion pairs in
// cluster tubes.

#include "tube/arc_model.hpp"
#include "tube/counts.hpp"
#include "tube/errors.hpp"
#include "tube/json_io.hpp"
#include "tube/render.hpp"
#include "tube/series.hpp"
#include "tube/sieve.hpp"
#include "tube/torsion.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tube;
using io::Json;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Caps {
  int brute = kBruteCap;
  int structured = kStructuredCap;
  int series_order = kDefaultSeriesOrder;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

Arc parse_arc(const std::string& text) {
  std::istringstream in(text);
  Arc a;
  char comma = 0;
  if (!(in >> a.i >> comma >> a.j) || comma != ',' || !(in >> std::ws).eof()) {
    throw InputError("arc must be written as i,j");
  }
  if (!a.valid()) throw InputError("arc needs j - i >= 2");
  return a;
}

// ---- count ----------------------------------------------------------------

int run_count(int n, bool refined, const std::string& format) {
  if (!refined) {
    const BigInt t = torsion_count(n);
    if (format == "json") {
      Json j;
      j["n"] = n;
      j["count"] = t.str();
      std::cout << io::dump(j) << '\n';
    } else if (format == "csv") {
      std::cout << "n,count\n" << n << ',' << t << '\n';
    } else {
      std::cout << t << '\n';
    }
    return 0;
  }
  const auto table = refined_table(n);
  if (format == "json") {
    std::cout << io::dump(io::count_table_json(n, table)) << '\n';
  } else {
    io::write_count_csv(std::cout, n, table);
  }
  return 0;
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(int n, const std::string& method, const Caps& caps) {
  const std::vector<PeriodicDiagram> halves =
      method == "brute" ? enumerate_brute(n, caps.brute) : enumerate_structured(n, caps.structured);
  for (const TorsionPair& p : torsion_pairs(halves)) std::cout << io::dump(io::to_json(p)) << '\n';
  return 0;
}

// ---- verify ----------------------------------------------------------------

class Matrix {
 public:
  void record(const std::string& name, bool ok) {
    rows_.push_back({name, ok ? "pass" : "FAIL"});
    all_ &= ok;
  }
  void skip(const std::string& name, const std::string& why) { rows_.push_back({name, "skipped (" + why + ")"}); }
  // Runs a check, turning exceptions into failures.
  void check(const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << '\n';
    }
    record(name, ok);
  }
  bool all_pass() const { return all_; }
  void print(std::ostream& os) const {
    std::size_t width = 0;
    for (const auto& [name, verdict] : rows_) width = std::max(width, name.size());
    for (const auto& [name, verdict] : rows_) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << name << verdict << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  bool all_ = true;
};

int run_verify(int n, const Caps& caps) {
  Matrix mx;
  const BigInt formula = torsion_count(n);
  std::cout << "n = " << n << ", T_n = " << formula << '\n';

  if (n <= caps.series_order) {
    mx.check("formula = series", [&] {
      return series_torsion(n, CellWeights::all_ones())[n].coefficient({}) == formula;
    });
    mx.check("refined formula = series", [&] {
      const MultiPoly coeff = series_torsion(n)[n];
      MultiPoly expected;
      for (const auto& [s, c] : refined_table(n)) {
        expected += MultiPoly::term(c, {s.triangles, s.cliques, s.empty_cells});
      }
      return coeff == expected && lagrange_coefficient(n) == coeff;
    });
  } else {
    mx.skip("formula = series", "n exceeds series order");
  }

  if (n > caps.structured) {
    mx.skip("structured enumeration", "n exceeds structured cap");
    mx.print(std::cout);
    return mx.all_pass() ? 0 : kExitMismatch;
  }

  const std::vector<PeriodicDiagram> halves = enumerate_structured(n, caps.structured);
  mx.record("2 * structured = formula", BigInt(2 * halves.size()) == formula);

  if (n <= caps.brute) {
    mx.check("brute = structured", [&] { return enumerate_brute(n, caps.brute) == halves; });
  } else {
    mx.skip("brute = structured", "n exceeds brute cap");
  }

  mx.check("halves are Ptolemy, lengths <= n", [&] {
    return std::all_of(halves.begin(), halves.end(), [](const auto& x) { return is_finite_half(x); });
  });

  mx.check("refined histogram = formula", [&] {
    std::map<CellStatistics, BigInt> hist;
    for (const PeriodicDiagram& x : halves) hist[statistics(x)] += 2;
    return hist == refined_table(n);
  });

  mx.check("decompose/compose round trip", [&] {
    return std::all_of(halves.begin(), halves.end(), [](const auto& x) { return compose(decompose(x)) == x; });
  });

  mx.check("pointed cycle round trip", [&] {
    return std::all_of(halves.begin(), halves.end(), [n](const auto& x) {
      return from_pointed_cycle(to_pointed_cycle(x), n) == x;
    });
  });

  mx.check("tau^d fixed halves = rank-d halves", [&] {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (fixed_under(halves, d).size() != enumerate_structured(d, caps.structured).size()) return false;
    }
    return true;
  });

  mx.check("cyclic sieving", [&] { return csp_verify(n, caps.structured).all_match; });

  mx.check("orbit count = orbit partition", [&] {
    return orbit_count(n) == orbit_count_direct(halves) &&
           orbit_count_refined(n) == orbit_count_refined_direct(halves);
  });

  if (n <= caps.brute) {
    mx.check("perp of a finite half is infinite", [&] {
      return std::all_of(halves.begin(), halves.end(), [n](const auto& x) {
        for (int i = 0; i < n; ++i) {
          for (int len = n + 1; len <= 2 * n + 1; ++len) {
            if (perp_contains(x, Arc{i, i + len})) return true;
          }
        }
        return false;
      });
    });
  } else {
    mx.skip("perp of a finite half is infinite", "n exceeds brute cap");
  }

  mx.print(std::cout);

  if (n <= caps.brute) {
    // The two ways of reading "tau^d-invariant pairs correspond to a smaller
    // rank", side by side. Only the first column is asserted above.
    std::cout << "d  fixed by tau^d  halves at rank d  halves at rank n/d\n";
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      std::cout << d << "  " << fixed_under(halves, d).size() << "  "
                << enumerate_structured(d, caps.structured).size() << "  "
                << enumerate_structured(n / d, caps.structured).size() << '\n';
    }
  }
  return mx.all_pass() ? 0 : kExitMismatch;
}

// ---- sieve / orbits -------------------------------------------------------

int run_sieve(int n, const std::string& format, const Caps& caps) {
  const SieveReport report = csp_verify(n, caps.structured);
  if (format == "json") {
    std::cout << io::dump(io::to_json(report)) << '\n';
  } else {
    std::cout << "n,d,k,l,m,polyValue,fixedCount,formula,match\n";
    for (const SieveEntry& e : report.entries) {
      std::cout << e.n << ',' << e.d << ',' << e.k << ',' << e.l << ',' << e.m << ',' << e.poly_value << ','
                << e.fixed_count << ',' << e.formula << ',' << (e.match ? "yes" : "NO") << '\n';
    }
  }
  return report.all_match ? 0 : kExitMismatch;
}

int run_orbits(int n, bool refined, const Caps& caps) {
  bool ok = true;
  if (!refined) {
    const BigInt count = orbit_count(n);
    std::cout << count << '\n';
    if (n <= caps.structured) {
      const BigInt direct = orbit_count_direct(enumerate_structured(n, caps.structured));
      if (direct != count) {
        std::cerr << "direct orbit partition gives " << direct << '\n';
        ok = false;
      }
    }
    return ok ? 0 : kExitMismatch;
  }
  const auto table = orbit_count_refined(n);
  io::write_count_csv(std::cout, n, table);
  if (n <= caps.structured && orbit_count_refined_direct(enumerate_structured(n, caps.structured)) != table) {
    std::cerr << "direct orbit partition disagrees\n";
    ok = false;
  }
  return ok ? 0 : kExitMismatch;
}

// ---- perp -----------------------------------------------------------------

PeriodicDiagram read_diagram(const std::string& path) {
  const Json j = io::parse(read_source(path));
  if (j.is_object() && j.contains("finite_side")) return io::pair_from_json(j).finite_half;
  return io::periodic_from_json(j);
}

int run_perp(int n, const std::string& diagram_path, const std::string& arc, int max_length) {
  const PeriodicDiagram x = read_diagram(diagram_path);
  if (n != 0 && n != x.rank()) throw InputError("--n does not match the diagram rank");
  if (!arc.empty()) {
    std::cout << (perp_contains(x, parse_arc(arc)) ? "yes" : "no") << '\n';
    return 0;
  }
  if (max_length < 2) throw InputError("perp needs --arc or --max-length >= 2");
  // X^perp is the suspension of nc X, and suspension is tau.
  std::cout << io::dump(io::to_json(tau(nc_enumerate(x, max_length)))) << '\n';
  return 0;
}

// ---- render ---------------------------------------------------------------

int run_render(const std::string& pair_path, const std::string& out_path) {
  const Json j = io::parse(read_source(pair_path));
  TorsionPair pair;
  if (j.is_object() && j.contains("finite_side")) {
    pair = io::pair_from_json(j);
  } else {
    pair = {io::periodic_from_json(j), Side::Left};
    if (!is_finite_half(pair.finite_half)) throw InputError("diagram is not a finite half");
  }
  const std::string svg = render_svg(pair);
  if (out_path.empty() || out_path == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << svg;
  }
  return 0;
}

// ---- series ---------------------------------------------------------------

int run_series(int order, bool torsion, bool ones) {
  if (order < 1) throw InputError("series order must be at least 1");
  const CellWeights w = ones ? CellWeights::all_ones() : CellWeights{};
  const SeriesPoly s = torsion ? series_torsion(order, w) : series_P(order, w);
  for (int k = 1; k <= order; ++k) std::cout << "z^" << k << ": " << s[k].str() << '\n';
  return 0;
}

// ---- decompose / compose --------------------------------------------------

int run_decompose(const std::string& input) {
  for (const std::string& line : nonempty_lines(read_source(input))) {
    const Json j = io::parse(line);
    if (j.is_object() && j.contains("finite_side")) {
      const TorsionPair p = io::pair_from_json(j);
      std::cout << io::dump(io::to_json(decompose(p.finite_half), p.finite_side)) << '\n';
    } else {
      const PeriodicDiagram x = io::periodic_from_json(j);
      if (!is_finite_half(x)) throw InputError("diagram is not a finite half");
      std::cout << io::dump(io::to_json(decompose(x))) << '\n';
    }
  }
  return 0;
}

int run_compose(const std::string& input) {
  for (const std::string& line : nonempty_lines(read_source(input))) {
    const io::SidedDecomposition d = io::decomposition_from_json(io::parse(line));
    PeriodicDiagram x(1);
    try {
      x = compose(d.wings);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (d.side) {
      std::cout << io::dump(io::to_json(TorsionPair{x, *d.side})) << '\n';
    } else {
      std::cout << io::dump(io::to_json(x)) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Torsion pairs in cluster tubes: counts, enumeration, verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps;
  app.add_option("--brute-cap", caps.brute, "Largest rank for subset-scan enumeration")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  app.add_option("--structured-cap", caps.structured, "Largest rank for structured enumeration")
      ->check(CLI::Range(1, 11))
      ->capture_default_str();
  app.add_option("--series-order", caps.series_order, "Truncation order for generating functions")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();

  const auto positive = CLI::Range(1, 100000);
  int n = 0;
  bool refined = false;
  std::string format;
  std::string method = "structured";
  std::string path;
  std::string out;
  std::string arc;
  int max_length = 0;
  bool torsion = false;
  bool ones = false;
  std::function<int()> action;

  auto* count = app.add_subcommand("count", "Number of torsion pairs in C_n");
  count->add_option("--n", n, "Rank")->required()->check(positive);
  count->add_flag("--refined", refined, "Table by triangles k, cliques l, empty cells m");
  count->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  count->callback([&] { action = [&] { return run_count(n, refined, format); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Every torsion pair as one JSON record per line");
  enumerate->add_option("--n", n, "Rank")->required()->check(positive);
  enumerate->add_option("--method", method, "Enumeration method")
      ->check(CLI::IsMember({"structured", "brute"}))
      ->capture_default_str();
  enumerate->callback([&] { action = [&] { return run_enumerate(n, method, caps); }; });

  auto* verify = app.add_subcommand("verify", "Cross-check every counting path at rank n");
  verify->add_option("--n", n, "Rank")->required()->check(positive);
  verify->callback([&] { action = [&] { return run_verify(n, caps); }; });

  auto* sieve = app.add_subcommand("sieve", "Cyclic sieving table under tau");
  sieve->add_option("--n", n, "Rank")->required()->check(positive);
  sieve->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sieve->callback([&] { action = [&] { return run_sieve(n, format, caps); }; });

  auto* orbits = app.add_subcommand("orbits", "Torsion pairs up to tau");
  orbits->add_option("--n", n, "Rank")->required()->check(positive);
  orbits->add_flag("--refined", refined, "Table by cell statistics");
  orbits->callback([&] { action = [&] { return run_orbits(n, refined, caps); }; });

  auto* perp = app.add_subcommand("perp", "Membership in, or listing of, X^perp");
  perp->add_option("--n", n, "Rank, checked against the diagram")->check(positive);
  perp->add_option("--diagram", path, "Diagram or torsion pair JSON file, - for stdin")->required();
  auto* arc_opt = perp->add_option("--arc", arc, "Arc i,j to test");
  perp->add_option("--max-length", max_length, "List perp orbits up to this length")->excludes(arc_opt);
  perp->callback([&] { action = [&] { return run_perp(n, path, arc, max_length); }; });

  auto* render = app.add_subcommand("render", "SVG of the AR quiver with the finite half boxed");
  render->add_option("--pair", path, "Torsion pair JSON file, - for stdin")->required();
  render->add_option("--out", out, "Output file; stdout by default");
  render->callback([&] { action = [&] { return run_render(path, out); }; });

  auto* series = app.add_subcommand("series", "Coefficients of the polygon generating function");
  series->add_option("--order", caps.series_order, "Truncation order")->check(CLI::Range(1, 200));
  series->add_flag("--torsion", torsion, "Print 2zP'/(1-P) instead of P");
  series->add_flag("--ones", ones, "Set x = y1 = y2 = 1");
  series->callback([&] { action = [&] { return run_series(caps.series_order, torsion, ones); }; });

  auto* dec = app.add_subcommand("decompose", "Wing decomposition of each input record");
  dec->add_option("--input", path, "JSON lines file, - for stdin");
  dec->callback([&] { action = [&] { return run_decompose(path.empty() ? "-" : path); }; });

  auto* comp = app.add_subcommand("compose", "Reassemble records produced by decompose");
  comp->add_option("--input", path, "JSON lines file, - for stdin");
  comp->callback([&] { action = [&] { return run_compose(path.empty() ? "-" : path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
