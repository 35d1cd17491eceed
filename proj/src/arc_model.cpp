#include "tube/arc_model.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace tube {

namespace {

// floor(a / b) for b > 0
int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Number of integers t with lo < t < hi and t == r (mod n).
int count_congruent_open(int lo, int hi, int r, int n) {
  if (hi - lo < 2) return 0;
  return floor_div(hi - 1 - r, n) - floor_div(lo - r, n);
}

void require_same_rank(const ArcOrbit& a, const ArcOrbit& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) +
                                " vs " + std::to_string(b.rank()));
  }
}

}  // namespace

std::array<Arc, 4> ptolemy_completions(const Arc& a, const Arc& b) {
  const Arc& lo = a.i < b.i ? a : b;
  const Arc& hi = a.i < b.i ? b : a;
  return {Arc{lo.i, hi.i}, Arc{lo.i, hi.j}, Arc{hi.i, lo.j}, Arc{lo.j, hi.j}};
}

int shift_window(int len_a, int len_b, int rank) {
  return (len_a + len_b + rank - 1) / rank + 1;
}

ArcOrbit::ArcOrbit(int rank, Arc arc) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (!arc.valid()) {
    throw std::invalid_argument("(" + std::to_string(arc.i) + "," +
                                std::to_string(arc.j) + ") is not an arc");
  }
  rep_ = arc.shifted(mod_floor(arc.i, rank) - arc.i);
}

bool ArcOrbit::contains(const Arc& a) const {
  return a.length() == length() && mod_floor(a.i, rank_) == rep_.i;
}

PeriodicDiagram::PeriodicDiagram(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
}

PeriodicDiagram::PeriodicDiagram(int rank, const std::vector<Arc>& arcs)
    : PeriodicDiagram(rank) {
  orbits_.reserve(arcs.size());
  for (const Arc& a : arcs) orbits_.emplace_back(rank, a);
  std::sort(orbits_.begin(), orbits_.end());
  orbits_.erase(std::unique(orbits_.begin(), orbits_.end()), orbits_.end());
}

PeriodicDiagram::PeriodicDiagram(int rank, std::vector<ArcOrbit> orbits)
    : rank_(rank), orbits_(std::move(orbits)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  for (const ArcOrbit& o : orbits_) {
    if (o.rank() != rank) throw std::invalid_argument("orbit of foreign rank");
  }
  std::sort(orbits_.begin(), orbits_.end());
  orbits_.erase(std::unique(orbits_.begin(), orbits_.end()), orbits_.end());
}

int PeriodicDiagram::max_length() const {
  return orbits_.empty() ? 0 : orbits_.back().length();
}

bool PeriodicDiagram::contains(const ArcOrbit& o) const {
  return o.rank() == rank_ && std::binary_search(orbits_.begin(), orbits_.end(), o);
}

bool PeriodicDiagram::contains(const Arc& a) const {
  return a.valid() && contains(ArcOrbit(rank_, a));
}

bool orbits_cross(const ArcOrbit& a, const ArcOrbit& b) {
  require_same_rank(a, b);
  const int n = a.rank();
  const int w = shift_window(a.length(), b.length(), n);
  for (int m = -w; m <= w; ++m) {
    if (cross(a.rep(), b.rep().shifted(m * n))) return true;
  }
  return false;
}

int ext1_dim(const ArcOrbit& a, const ArcOrbit& b) {
  require_same_rank(a, b);
  const int n = a.rank();
  // (i,j) is the shorter arc, (k,l) the longer one.
  const Arc& s = a.length() <= b.length() ? a.rep() : b.rep();
  const Arc& l = a.length() <= b.length() ? b.rep() : a.rep();
  const int plus = count_congruent_open(s.i, s.j, mod_floor(l.i, n), n);
  const int minus = count_congruent_open(s.i, s.j, mod_floor(l.j, n), n);
  return plus + minus;
}

bool is_rigid(const ArcOrbit& a) { return a.length() <= a.rank(); }

bool nc_contains(const PeriodicDiagram& x, const Arc& a) {
  if (!a.valid()) throw std::invalid_argument("nc_contains: not an arc");
  const ArcOrbit probe(x.rank(), a);
  return std::none_of(x.orbits().begin(), x.orbits().end(),
                      [&](const ArcOrbit& o) { return orbits_cross(o, probe); });
}

PeriodicDiagram nc_enumerate(const PeriodicDiagram& x, int max_len) {
  if (max_len < 2) throw std::invalid_argument("nc_enumerate: max_len < 2");
  std::vector<ArcOrbit> out;
  for (const ArcOrbit& o : all_orbits(x.rank(), max_len)) {
    if (nc_contains(x, o.rep())) out.push_back(o);
  }
  return PeriodicDiagram(x.rank(), std::move(out));
}

bool is_ptolemy_bounded(const PeriodicDiagram& x, int max_len) {
  const int n = x.rank();
  for (const ArcOrbit& a : x.orbits()) {
    for (const ArcOrbit& b : x.orbits()) {
      const int w = shift_window(a.length(), b.length(), n);
      for (int m = -w; m <= w; ++m) {
        const Arc shifted = b.rep().shifted(m * n);
        if (!cross(a.rep(), shifted)) continue;
        for (const Arc& c : ptolemy_completions(a.rep(), shifted)) {
          if (c.length() < 2 || c.length() > max_len) continue;
          if (!x.contains(c)) return false;
        }
      }
    }
  }
  return true;
}

bool is_ptolemy(const PeriodicDiagram& x) { return is_ptolemy_bounded(x, INT_MAX); }

PeriodicDiagram tau(const PeriodicDiagram& x, int times) {
  std::vector<ArcOrbit> out;
  out.reserve(x.size());
  for (const ArcOrbit& o : x.orbits()) out.emplace_back(x.rank(), o.rep().shifted(-times));
  return PeriodicDiagram(x.rank(), std::move(out));
}

std::vector<ArcOrbit> all_orbits(int rank, int max_len) {
  std::vector<ArcOrbit> out;
  for (int len = 2; len <= max_len; ++len) {
    for (int i = 0; i < rank; ++i) out.emplace_back(rank, Arc{i, i + len});
  }
  return out;
}

}  // namespace tube
