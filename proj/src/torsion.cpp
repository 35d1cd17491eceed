#include "tube/torsion.hpp"

#include "tube/counts.hpp"
#include "tube/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tube {

namespace {

void append_piece(std::vector<ArcOrbit>& out, int rank, int lo, const PolygonDiagram& piece) {
  if (piece.degenerate()) return;
  out.emplace_back(rank, Arc{lo, lo + piece.size()});
  for (const Diagonal& d : piece.diagonals()) out.emplace_back(rank, Arc{lo + d.a, lo + d.b});
}

std::vector<bool> overarched(const PeriodicDiagram& x) {
  const int n = x.rank();
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const ArcOrbit& o : x.orbits()) {
    for (int v = o.rep().i + 1; v < o.rep().j; ++v) covered[static_cast<std::size_t>(mod_floor(v, n))] = true;
  }
  return covered;
}

}  // namespace

std::string_view side_name(Side side) { return side == Side::Left ? "left" : "right"; }

WingDecomposition::WingDecomposition(int rank, std::vector<int> cuts,
                                     std::vector<PolygonDiagram> pieces)
    : rank_(rank), cuts_(std::move(cuts)), pieces_(std::move(pieces)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (cuts_.empty()) throw std::invalid_argument("wing decomposition needs at least one cut");
  if (cuts_.size() != pieces_.size()) throw std::invalid_argument("one piece per cut required");
  for (std::size_t k = 0; k < cuts_.size(); ++k) {
    if (cuts_[k] < 0 || cuts_[k] >= rank_) throw std::invalid_argument("cut outside [0, rank)");
    if (k > 0 && cuts_[k] <= cuts_[k - 1]) throw std::invalid_argument("cuts must increase strictly");
  }
  for (std::size_t k = 0; k < cuts_.size(); ++k) {
    if (pieces_[k].size() != gap(k)) {
      throw std::invalid_argument("piece " + std::to_string(k) + " has size " +
                                  std::to_string(pieces_[k].size()) + " but its gap is " +
                                  std::to_string(gap(k)));
    }
  }
}

int WingDecomposition::gap(std::size_t k) const {
  const int next = k + 1 < cuts_.size() ? cuts_[k + 1] : cuts_.front() + rank_;
  return next - cuts_[k];
}

int PointedCycle::total_size() const {
  int total = 0;
  for (const PolygonDiagram& p : pieces) total += p.size();
  return total;
}

bool is_finite_half(const PeriodicDiagram& x) {
  return x.max_length() <= x.rank() && is_ptolemy(x);
}

bool perp_contains(const PeriodicDiagram& x, const Arc& a) {
  return nc_contains(x, a.shifted(1));
}

WingDecomposition decompose(const PeriodicDiagram& x) {
  const int n = x.rank();
  if (x.max_length() > n) throw std::invalid_argument("decompose: orbit longer than the rank");
  const std::vector<bool> covered = overarched(x);
  std::vector<int> cuts;
  for (int v = 0; v < n; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) cuts.push_back(v);
  }
  if (cuts.empty()) throw std::invalid_argument("decompose: every vertex is overarched");

  std::vector<PolygonDiagram> pieces;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const int lo = cuts[k];
    const int hi = k + 1 < cuts.size() ? cuts[k + 1] : cuts.front() + n;
    const int g = hi - lo;
    if (g == 1) {
      pieces.emplace_back(1);
      continue;
    }
    if (!x.contains(Arc{lo, hi})) {
      throw std::invalid_argument("decompose: top arc (" + std::to_string(lo) + "," +
                                  std::to_string(hi) + ") missing");
    }
    std::vector<Diagonal> inside;
    for (const ArcOrbit& o : x.orbits()) {
      const int len = o.length();
      if (len > g) continue;
      const int a = lo + mod_floor(o.rep().i - lo, n);
      if (a + len > hi || (a == lo && len == g)) continue;
      inside.push_back({a - lo, a + len - lo});
    }
    pieces.emplace_back(g, std::move(inside));
  }
  return WingDecomposition(n, std::move(cuts), std::move(pieces));
}

PeriodicDiagram compose(const WingDecomposition& w) {
  std::vector<ArcOrbit> orbits;
  for (std::size_t k = 0; k < w.cuts().size(); ++k) {
    if (!is_ptolemy_polygon(w.pieces()[k])) {
      throw std::invalid_argument("compose: piece " + std::to_string(k) + " is not a Ptolemy diagram");
    }
    append_piece(orbits, w.rank(), w.cuts()[k], w.pieces()[k]);
  }
  return PeriodicDiagram(w.rank(), std::move(orbits));
}

PointedCycle to_pointed_cycle(const PeriodicDiagram& x) {
  const WingDecomposition w = decompose(x);
  // The last span is the only one whose non-base vertices reach n == 0 (mod n).
  PointedCycle pc;
  pc.pieces.push_back(w.pieces().back());
  for (std::size_t k = 0; k + 1 < w.pieces().size(); ++k) pc.pieces.push_back(w.pieces()[k]);
  pc.pointed_piece = 0;
  pc.pointed_vertex = x.rank() - w.cuts().back();
  return pc;
}

PeriodicDiagram from_pointed_cycle(const PointedCycle& pc, int rank) {
  if (pc.pieces.empty()) throw std::invalid_argument("pointed cycle without pieces");
  if (pc.total_size() != rank) {
    throw std::invalid_argument("pointed cycle has total size " + std::to_string(pc.total_size()) +
                                ", expected " + std::to_string(rank));
  }
  if (pc.pointed_piece >= pc.pieces.size()) throw std::invalid_argument("pointed piece out of range");
  const int ell = pc.pointed_vertex;
  if (ell < 1 || ell > pc.pieces[pc.pointed_piece].size()) {
    throw std::invalid_argument("pointed vertex out of range");
  }
  std::vector<ArcOrbit> orbits;
  int base = -ell;
  const std::size_t r = pc.pieces.size();
  for (std::size_t k = 0; k < r; ++k) {
    const PolygonDiagram& piece = pc.pieces[(pc.pointed_piece + k) % r];
    append_piece(orbits, rank, base, piece);
    base += piece.size();
  }
  return PeriodicDiagram(rank, std::move(orbits));
}

std::vector<std::vector<int>> cycle_vertex_labels(const PointedCycle& pc, int rank) {
  std::vector<std::vector<int>> labels(pc.pieces.size());
  int base = -pc.pointed_vertex;
  const std::size_t r = pc.pieces.size();
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t idx = (pc.pointed_piece + k) % r;
    for (int v = 0; v <= pc.pieces[idx].size(); ++v) labels[idx].push_back(mod_floor(base + v, rank));
    base += pc.pieces[idx].size();
  }
  return labels;
}

CellStatistics statistics(const PeriodicDiagram& x) {
  CellStatistics s;
  const WingDecomposition w = decompose(x);
  for (const PolygonDiagram& p : w.pieces()) s += statistics_polygon(p);
  return s;
}

std::vector<PeriodicDiagram> enumerate_brute(int n, int cap) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n > cap) throw CapExceeded("enumerate_brute", n, cap);
  const std::vector<ArcOrbit> ground = all_orbits(n, n);
  const auto index_of = [n](const Arc& a) { return (a.length() - 2) * n + mod_floor(a.i, n); };

  kernels::ImplicationSet set(static_cast<int>(ground.size()));
  for (std::size_t x = 0; x < ground.size(); ++x) {
    for (std::size_t y = x; y < ground.size(); ++y) {
      const Arc& a = ground[x].rep();
      const Arc& b = ground[y].rep();
      const int w = shift_window(a.length(), b.length(), n);
      std::uint64_t required = 0;
      bool crosses = false;
      for (int m = -w; m <= w; ++m) {
        const Arc shifted = b.shifted(m * n);
        if (!cross(a, shifted)) continue;
        crosses = true;
        for (const Arc& c : ptolemy_completions(a, shifted)) {
          if (c.length() < 2) continue;
          required |= c.length() > n ? kernels::ImplicationSet::kUnsatisfiable
                                     : std::uint64_t{1} << index_of(c);
        }
      }
      if (crosses) set.add((std::uint64_t{1} << x) | (std::uint64_t{1} << y), required);
    }
  }

  std::vector<PeriodicDiagram> out;
  for (std::uint64_t mask : kernels::closed_subsets(set)) {
    std::vector<ArcOrbit> chosen;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if (mask >> k & 1u) chosen.push_back(ground[k]);
    }
    out.emplace_back(n, std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PeriodicDiagram> enumerate_structured(int n, int cap, int polygon_cap) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n > cap) throw CapExceeded("enumerate_structured", n, cap);
  std::vector<std::vector<PolygonDiagram>> polygons(static_cast<std::size_t>(n) + 1);
  polygons[1] = {PolygonDiagram(1)};
  for (int g = 2; g <= n; ++g) polygons[static_cast<std::size_t>(g)] = enumerate_polygon(g, polygon_cap);

  std::vector<PeriodicDiagram> out;
  for (std::uint32_t cutmask = 1; cutmask < (1u << n); ++cutmask) {
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v) {
      if (cutmask >> v & 1u) cuts.push_back(v);
    }
    std::vector<int> gaps;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      gaps.push_back((k + 1 < cuts.size() ? cuts[k + 1] : cuts.front() + n) - cuts[k]);
    }
    // Odometer over one polygon choice per gap.
    std::vector<std::size_t> choice(cuts.size(), 0);
    while (true) {
      std::vector<ArcOrbit> orbits;
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        append_piece(orbits, n, cuts[k], polygons[static_cast<std::size_t>(gaps[k])][choice[k]]);
      }
      out.emplace_back(n, std::move(orbits));
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < polygons[static_cast<std::size_t>(gaps[k])].size()) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorsionPair> torsion_pairs(const std::vector<PeriodicDiagram>& halves) {
  std::vector<TorsionPair> out;
  out.reserve(2 * halves.size());
  for (const PeriodicDiagram& h : halves) {
    out.push_back({h, Side::Left});
    out.push_back({h, Side::Right});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PeriodicDiagram> fixed_under(const std::vector<PeriodicDiagram>& halves, int d) {
  std::vector<PeriodicDiagram> out;
  for (const PeriodicDiagram& h : halves) {
    if (d < 1 || h.rank() % d != 0) {
      throw std::invalid_argument(std::to_string(d) + " does not divide the rank " +
                                  std::to_string(h.rank()));
    }
    if (tau(h, d) == h) out.push_back(h);
  }
  return out;
}

std::vector<PeriodicDiagram> fixed_under(int n, int d) {
  if (d < 1 || n % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  return fixed_under(enumerate_structured(n), d);
}

BigInt orbit_count(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  BigInt sum = 0;
  for (int b = 0; b < n; ++b) sum += torsion_count(std::gcd(b, n));
  return sum / n;
}

std::map<CellStatistics, BigInt> orbit_count_refined(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::map<CellStatistics, BigInt> out;
  for (const auto& [stats, count] : refined_table(n)) {
    BigInt sum = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0 || stats.triangles % d != 0 || stats.cliques % d != 0 ||
          stats.empty_cells % d != 0) {
        continue;
      }
      sum += euler_phi(d) * torsion_count_refined(n / d, stats.triangles / d, stats.cliques / d,
                                                  stats.empty_cells / d);
    }
    out[stats] = sum / n;
  }
  return out;
}

namespace {

// Calls visit(representative, orbit size) once per tau-orbit of the pairs.
template <class Visit>
void for_each_tau_orbit(const std::vector<PeriodicDiagram>& halves, Visit visit) {
  const std::vector<TorsionPair> pairs = torsion_pairs(halves);
  std::vector<bool> seen(pairs.size(), false);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (seen[k]) continue;
    std::size_t size = 0;
    TorsionPair cur = pairs[k];
    do {
      const auto it = std::lower_bound(pairs.begin(), pairs.end(), cur);
      if (it == pairs.end() || !(*it == cur)) {
        throw std::invalid_argument("pair set is not closed under tau");
      }
      seen[static_cast<std::size_t>(it - pairs.begin())] = true;
      ++size;
      cur.finite_half = tau(cur.finite_half);
    } while (!(cur == pairs[k]));
    visit(pairs[k], size);
  }
}

}  // namespace

BigInt orbit_count_direct(const std::vector<PeriodicDiagram>& halves) {
  BigInt count = 0;
  for_each_tau_orbit(halves, [&](const TorsionPair&, std::size_t) { ++count; });
  return count;
}

std::map<CellStatistics, BigInt> orbit_count_refined_direct(const std::vector<PeriodicDiagram>& halves) {
  std::map<CellStatistics, BigInt> out;
  for_each_tau_orbit(halves, [&](const TorsionPair& p, std::size_t) {
    out[statistics(p.finite_half)] += 1;
  });
  return out;
}

}  // namespace tube
