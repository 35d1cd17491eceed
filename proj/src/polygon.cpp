#include "tube/polygon.hpp"

#include "tube/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace tube {

namespace {

constexpr bool diagonals_cross(const Diagonal& x, const Diagonal& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

int diagonal_index(int m, int a, int b) {
  // Rows a = 0..m-2 hold b = a+2..m, except (0, m) which is the base edge.
  int idx = 0;
  for (int r = 0; r < a; ++r) idx += (m - r - 1) - (r == 0 ? 1 : 0);
  return idx + (b - a - 2);
}

void split_faces(const PolygonDiagram& p, const std::vector<Diagonal>& uncrossed,
                 std::vector<int> face, std::vector<std::vector<int>>& out) {
  const std::size_t k = face.size();
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = s + 2; t < k; ++t) {
      if (s == 0 && t == k - 1) continue;
      const Diagonal d{face[s], face[t]};
      if (!std::binary_search(uncrossed.begin(), uncrossed.end(), d)) continue;
      std::vector<int> inner(face.begin() + static_cast<long>(s), face.begin() + static_cast<long>(t) + 1);
      std::vector<int> outer(face.begin(), face.begin() + static_cast<long>(s) + 1);
      outer.insert(outer.end(), face.begin() + static_cast<long>(t), face.end());
      split_faces(p, uncrossed, std::move(inner), out);
      split_faces(p, uncrossed, std::move(outer), out);
      return;
    }
  }
  out.push_back(std::move(face));
}

}  // namespace

PolygonDiagram::PolygonDiagram(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("polygon size must be at least 1");
}

PolygonDiagram::PolygonDiagram(int size, std::vector<Diagonal> diagonals)
    : size_(size), diagonals_(std::move(diagonals)) {
  if (size < 1) throw std::invalid_argument("polygon size must be at least 1");
  for (const Diagonal& d : diagonals_) {
    if (d.a < 0 || d.b > size || d.b - d.a < 2 || (d.a == 0 && d.b == size)) {
      throw std::invalid_argument("(" + std::to_string(d.a) + "," + std::to_string(d.b) +
                                  ") is not a diagonal of the size-" + std::to_string(size) +
                                  " polygon");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
}

bool PolygonDiagram::has_diagonal(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(diagonals_.begin(), diagonals_.end(), Diagonal{a, b});
}

bool PolygonDiagram::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (b - a == 1) return true;
  if (a == 0 && b == size_) return true;
  return has_diagonal(a, b);
}

std::string_view cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Triangle: return "triangle";
    case CellKind::Clique: return "clique";
    case CellKind::EmptyCell: return "empty";
  }
  return "?";
}

std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 2; b <= m; ++b) {
      if (a == 0 && b == m) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

kernels::ImplicationSet polygon_implications(int m) {
  const std::vector<Diagonal> diags = all_diagonals(m);
  kernels::ImplicationSet set(static_cast<int>(diags.size()));
  const auto bit = [m](int a, int b) {
    return std::uint64_t{1} << diagonal_index(m, std::min(a, b), std::max(a, b));
  };
  for (std::size_t x = 0; x < diags.size(); ++x) {
    for (std::size_t y = x + 1; y < diags.size(); ++y) {
      const Diagonal& lo = diags[x].a < diags[y].a ? diags[x] : diags[y];
      const Diagonal& hi = diags[x].a < diags[y].a ? diags[y] : diags[x];
      if (!diagonals_cross(lo, hi)) continue;
      std::uint64_t required = 0;
      for (const auto& [a, b] : {std::pair{lo.a, hi.a}, std::pair{lo.a, hi.b},
                                std::pair{hi.a, lo.b}, std::pair{lo.b, hi.b}}) {
        if (b - a < 2 || (a == 0 && b == m)) continue;
        required |= bit(a, b);
      }
      set.add((std::uint64_t{1} << x) | (std::uint64_t{1} << y), required);
    }
  }
  return set;
}

bool is_ptolemy_polygon(const PolygonDiagram& p) {
  const auto& ds = p.diagonals();
  for (const Diagonal& x : ds) {
    for (const Diagonal& y : ds) {
      if (!(x.a < y.a) || !diagonals_cross(x, y)) continue;
      for (const auto& [a, b] : {std::pair{x.a, y.a}, std::pair{x.a, y.b},
                                std::pair{y.a, x.b}, std::pair{x.b, y.b}}) {
        if (b - a >= 2 && !p.has_edge(a, b)) return false;
      }
    }
  }
  return true;
}

std::uint64_t diagonal_mask(const PolygonDiagram& p) {
  std::uint64_t mask = 0;
  for (const Diagonal& d : p.diagonals()) mask |= std::uint64_t{1} << diagonal_index(p.size(), d.a, d.b);
  return mask;
}

PolygonDiagram from_diagonal_mask(int m, std::uint64_t mask) {
  const std::vector<Diagonal> diags = all_diagonals(m);
  std::vector<Diagonal> chosen;
  for (std::size_t k = 0; k < diags.size(); ++k) {
    if (mask >> k & 1u) chosen.push_back(diags[k]);
  }
  return PolygonDiagram(m, std::move(chosen));
}

std::vector<PolygonDiagram> enumerate_polygon(int m, int cap) {
  if (m < 1) throw std::invalid_argument("polygon size must be at least 1");
  if (m > cap) throw CapExceeded("enumerate_polygon", m, cap);

  const kernels::ImplicationSet set = polygon_implications(m);
  const int width = set.width();
  // Each implication is checked as soon as its highest bit is decided.
  std::vector<std::vector<std::size_t>> ready(static_cast<std::size_t>(std::max(width, 1)));
  for (std::size_t c = 0; c < set.size(); ++c) {
    const std::uint64_t bits = set.premises()[c] | set.requirements()[c];
    ready[static_cast<std::size_t>(63 - __builtin_clzll(bits))].push_back(c);
  }

  std::vector<std::uint64_t> found;
  std::function<void(int, std::uint64_t)> extend = [&](int t, std::uint64_t mask) {
    if (t == width) {
      found.push_back(mask);
      return;
    }
    for (std::uint64_t choice : {std::uint64_t{0}, std::uint64_t{1}}) {
      const std::uint64_t next = mask | (choice << t);
      bool ok = true;
      for (std::size_t c : ready[static_cast<std::size_t>(t)]) {
        const std::uint64_t pr = set.premises()[c];
        const std::uint64_t rq = set.requirements()[c];
        if ((next & pr) == pr && (next & rq) != rq) {
          ok = false;
          break;
        }
      }
      if (ok) extend(t + 1, next);
    }
  };
  extend(0, 0);

  std::vector<PolygonDiagram> out;
  out.reserve(found.size());
  for (std::uint64_t mask : found) out.push_back(from_diagonal_mask(m, mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolygonDiagram> enumerate_polygon_exhaustive(int m, int cap) {
  if (m < 1) throw std::invalid_argument("polygon size must be at least 1");
  if (m > cap) throw CapExceeded("enumerate_polygon_exhaustive", m, cap);
  std::vector<PolygonDiagram> out;
  for (std::uint64_t mask : kernels::closed_subsets(polygon_implications(m))) {
    out.push_back(from_diagonal_mask(m, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> cells(const PolygonDiagram& p) {
  if (p.degenerate()) return {};
  const auto& ds = p.diagonals();
  std::vector<Diagonal> uncrossed;
  for (const Diagonal& x : ds) {
    const bool crossed =
        std::any_of(ds.begin(), ds.end(), [&](const Diagonal& y) { return diagonals_cross(x, y); });
    if (!crossed) uncrossed.push_back(x);
  }

  std::vector<int> whole(static_cast<std::size_t>(p.size()) + 1);
  for (int v = 0; v <= p.size(); ++v) whole[static_cast<std::size_t>(v)] = v;
  std::vector<std::vector<int>> faces;
  split_faces(p, uncrossed, std::move(whole), faces);

  std::vector<Cell> out;
  for (auto& face : faces) {
    const std::size_t k = face.size();
    Cell cell{std::move(face), CellKind::Triangle};
    if (k > 3) {
      std::size_t present = 0;
      std::size_t internal = 0;
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = s + 2; t < k; ++t) {
          if (s == 0 && t == k - 1) continue;
          ++internal;
          if (p.has_diagonal(cell.vertices[s], cell.vertices[t])) ++present;
        }
      }
      if (present == internal) {
        cell.kind = CellKind::Clique;
      } else if (present == 0) {
        cell.kind = CellKind::EmptyCell;
      } else {
        throw std::logic_error("mixed face in polygon diagram: not a Ptolemy diagram");
      }
    }
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(),
            [](const Cell& x, const Cell& y) { return x.vertices < y.vertices; });
  return out;
}

CellStatistics statistics_polygon(const PolygonDiagram& p) {
  CellStatistics s;
  for (const Cell& c : cells(p)) {
    switch (c.kind) {
      case CellKind::Triangle: ++s.triangles; break;
      case CellKind::Clique: ++s.cliques; break;
      case CellKind::EmptyCell: ++s.empty_cells; break;
    }
  }
  return s;
}

BaseDecomposition decompose_base(const PolygonDiagram& p) {
  BaseDecomposition out;
  if (p.degenerate()) return out;
  for (Cell& c : cells(p)) {
    if (c.vertices.front() == 0 && c.vertices.back() == p.size()) {
      out.base = std::move(c);
      break;
    }
  }
  if (!out.base) throw std::logic_error("no cell on the base edge");
  const std::vector<int>& v = out.base->vertices;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const int lo = v[k];
    const int hi = v[k + 1];
    std::vector<Diagonal> inside;
    for (const Diagonal& d : p.diagonals()) {
      if (d.a >= lo && d.b <= hi && !(d.a == lo && d.b == hi)) inside.push_back({d.a - lo, d.b - lo});
    }
    out.glued.emplace_back(hi - lo, std::move(inside));
  }
  return out;
}

PolygonDiagram assemble(CellKind kind, const std::vector<PolygonDiagram>& glued) {
  const std::size_t sides = glued.size();
  if (kind == CellKind::Triangle && sides != 2) {
    throw std::invalid_argument("a triangle has two non-base sides");
  }
  if (kind != CellKind::Triangle && sides < 3) {
    throw std::invalid_argument("cliques and empty cells have at least three non-base sides");
  }
  std::vector<int> v{0};
  for (const PolygonDiagram& g : glued) v.push_back(v.back() + g.size());
  const int m = v.back();

  std::vector<Diagonal> diags;
  for (std::size_t k = 0; k < sides; ++k) {
    if (glued[k].size() >= 2) diags.push_back({v[k], v[k + 1]});
    for (const Diagonal& d : glued[k].diagonals()) diags.push_back({d.a + v[k], d.b + v[k]});
  }
  if (kind == CellKind::Clique) {
    for (std::size_t s = 0; s < v.size(); ++s) {
      for (std::size_t t = s + 2; t < v.size(); ++t) {
        if (s == 0 && t == v.size() - 1) continue;
        diags.push_back({v[s], v[t]});
      }
    }
  }
  return PolygonDiagram(m, std::move(diags));
}

PolygonDiagram assemble(const BaseDecomposition& d) {
  if (!d.base) {
    if (!d.glued.empty()) throw std::invalid_argument("degenerate diagram has no glued pieces");
    return PolygonDiagram(1);
  }
  return assemble(d.base->kind, d.glued);
}

CellStatistics recursive_statistics(const PolygonDiagram& p) {
  const BaseDecomposition d = decompose_base(p);
  CellStatistics s;
  if (!d.base) return s;
  switch (d.base->kind) {
    case CellKind::Triangle: ++s.triangles; break;
    case CellKind::Clique: ++s.cliques; break;
    case CellKind::EmptyCell: ++s.empty_cells; break;
  }
  for (const PolygonDiagram& g : d.glued) s += recursive_statistics(g);
  return s;
}

}  // namespace tube
