#pragma once

// Slow, direct reimplementations used as references by the tests. They share
// no code with the library beyond the plain Arc struct.

#include "tube/arc_model.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using tube::Arc;

// (i mod n, length): one canonical key per orbit.
using Key = std::pair<int, int>;
using ArcSet = std::set<Key>;

inline constexpr int kWide = 40;

inline int mod(int a, int n) { return ((a % n) + n) % n; }

inline Key key(const Arc& a, int n) { return {mod(a.i, n), a.j - a.i}; }

inline bool cross(const Arc& a, const Arc& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

inline Arc rep(const Key& k) { return {k.first, k.first + k.second}; }

/// Number of shifts of b crossing a, over a window far larger than needed.
inline int crossing_shifts(const Arc& a, const Arc& b, int n) {
  int count = 0;
  for (int m = -kWide; m <= kWide; ++m) count += oracle::cross(a, b.shifted(m * n)) ? 1 : 0;
  return count;
}

inline bool contains(const ArcSet& x, const Arc& a, int n) { return a.j - a.i >= 2 && x.count(key(a, n)) != 0; }

inline bool nc(const ArcSet& x, const Arc& a, int n) {
  for (const Key& k : x) {
    if (crossing_shifts(a, rep(k), n) > 0) return false;
  }
  return true;
}

/// Every crossing pair of lifts must have its completions in x.
inline bool is_ptolemy(const ArcSet& x, int n) {
  for (const Key& ka : x) {
    const Arc a = rep(ka);
    for (const Key& kb : x) {
      for (int m = -kWide; m <= kWide; ++m) {
        Arc b = rep(kb).shifted(m * n);
        if (!oracle::cross(a, b)) continue;
        Arc lo = a.i < b.i ? a : b;
        Arc hi = a.i < b.i ? b : a;
        const Arc need[4] = {{lo.i, hi.i}, {lo.i, hi.j}, {hi.i, lo.j}, {lo.j, hi.j}};
        for (const Arc& c : need) {
          if (c.j - c.i >= 2 && !contains(x, c, n)) return false;
        }
      }
    }
  }
  return true;
}

/// Smallest superset closed under completions, ignoring arcs longer than
/// max_len.
inline ArcSet ptolemy_closure(ArcSet x, int n, int max_len) {
  bool grew = true;
  while (grew) {
    grew = false;
    const ArcSet snapshot = x;
    for (const Key& ka : snapshot) {
      const Arc a = rep(ka);
      for (const Key& kb : snapshot) {
        for (int m = -kWide; m <= kWide; ++m) {
          Arc b = rep(kb).shifted(m * n);
          if (!oracle::cross(a, b)) continue;
          Arc lo = a.i < b.i ? a : b;
          Arc hi = a.i < b.i ? b : a;
          const Arc need[4] = {{lo.i, hi.i}, {lo.i, hi.j}, {hi.i, lo.j}, {lo.j, hi.j}};
          for (const Arc& c : need) {
            if (c.j - c.i < 2 || c.j - c.i > max_len) continue;
            grew = x.insert(key(c, n)).second || grew;
          }
        }
      }
    }
  }
  return x;
}

inline ArcSet to_set(const tube::PeriodicDiagram& d) {
  ArcSet s;
  for (const tube::ArcOrbit& o : d.orbits()) s.insert(key(o.rep(), d.rank()));
  return s;
}

inline tube::PeriodicDiagram from_set(const ArcSet& s, int n) {
  std::vector<Arc> arcs;
  for (const Key& k : s) arcs.push_back(rep(k));
  return tube::PeriodicDiagram(n, arcs);
}

/// All orbit keys with length in [2, max_len].
inline std::vector<Key> all_keys(int n, int max_len) {
  std::vector<Key> out;
  for (int len = 2; len <= max_len; ++len) {
    for (int i = 0; i < n; ++i) out.push_back({i, len});
  }
  return out;
}

/// Finite halves by testing every subset of short orbits.
inline std::vector<ArcSet> finite_halves(int n) {
  const std::vector<Key> keys = all_keys(n, n);
  std::vector<ArcSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << keys.size()); ++mask) {
    ArcSet s;
    for (std::size_t b = 0; b < keys.size(); ++b) {
      if ((mask >> b) & 1U) s.insert(keys[b]);
    }
    if (is_ptolemy(s, n)) out.push_back(std::move(s));
  }
  return out;
}

/// Polygon Ptolemy check on an (m+1)-gon; edges (a, a+1) and (0, m) always present.
inline bool polygon_ptolemy(const std::set<std::pair<int, int>>& diags, int m) {
  const auto present = [&](int a, int b) {
    return b - a <= 1 || (a == 0 && b == m) || diags.count({a, b}) != 0;
  };
  for (const auto& [i, j] : diags) {
    for (const auto& [r, s] : diags) {
      if (!(i < r && r < j && j < s)) continue;
      if (!present(i, r) || !present(i, s) || !present(r, j) || !present(j, s)) return false;
    }
  }
  return true;
}

inline std::size_t polygon_count(int m) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 2; b <= m; ++b) {
      if (!(a == 0 && b == m)) all.push_back({a, b});
    }
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::set<std::pair<int, int>> d;
    for (std::size_t b = 0; b < all.size(); ++b) {
      if ((mask >> b) & 1U) d.insert(all[b]);
    }
    count += polygon_ptolemy(d, m) ? 1 : 0;
  }
  return count;
}

/// n! / prod parts! style multinomial with plain 64-bit arithmetic, for
/// small arguments only.
inline unsigned long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  unsigned long long r = 1;
  for (long long t = 1; t <= b; ++t) r = r * static_cast<unsigned long long>(a - b + t) / static_cast<unsigned long long>(t);
  return r;
}

}  // namespace oracle
