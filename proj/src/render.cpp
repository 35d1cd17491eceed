#include "tube/render.hpp"

#include <sstream>

namespace tube {

namespace {

constexpr int kHalfStep = 20;  // horizontal distance between adjacent levels
constexpr int kRowHeight = 36;
constexpr int kMargin = 30;

struct Layout {
  int n;
  int x(const Arc& a) const { return kMargin + (a.i + a.j) * kHalfStep; }
  int y(const Arc& a) const { return kMargin + (n + 2 - a.length()) * kRowHeight; }
  int width() const { return 2 * kMargin + (3 * n + 2) * kHalfStep; }
  int height() const { return 2 * kMargin + (n + 1) * kRowHeight; }
};

}  // namespace

std::string vertex_label(const Arc& a, int n) {
  const int i = mod_floor(a.i, n);
  const int j = mod_floor(a.j, n);
  if (n <= 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

std::string render_svg(const TorsionPair& pair) {
  const PeriodicDiagram& x = pair.finite_half;
  const int n = x.rank();
  const Layout lay{n};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << lay.width()
     << "\" height=\"" << lay.height() << "\" viewBox=\"0 0 " << lay.width() << ' ' << lay.height()
     << "\">\n"
     << "<title>rank " << n << ", finite side " << side_name(pair.finite_side) << "</title>\n"
     << "<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";

  // Wings: the tops of the non-degenerate spans of the decomposition.
  const WingDecomposition w = decompose(x);
  os << "<g class=\"wings\" stroke=\"black\" stroke-dasharray=\"2,3\" fill=\"none\">\n";
  for (std::size_t k = 0; k < w.cuts().size(); ++k) {
    if (w.pieces()[k].degenerate()) continue;
    for (int copy = -1; copy <= 1; ++copy) {
      const Arc top{w.cuts()[k] + copy * n, w.cuts()[k] + w.gap(k) + copy * n};
      const Arc left{top.i, top.i + 2};
      const Arc right{top.j - 2, top.j};
      os << "<polyline points=\"" << lay.x(left) << ',' << lay.y(left) << ' ' << lay.x(top) << ','
         << lay.y(top) << ' ' << lay.x(right) << ',' << lay.y(right) << "\"/>\n";
    }
  }
  os << "</g>\n";

  for (int len = 2; len <= n + 2; ++len) {
    for (int i = 0; i <= n; ++i) {
      const Arc a{i, i + len};
      const std::string label = vertex_label(a, n);
      const int cx = lay.x(a);
      const int cy = lay.y(a);
      if (len <= n && x.contains(a)) {
        os << "<rect class=\"boxed\" data-label=\"" << label << "\" x=\"" << cx - 14 << "\" y=\""
           << cy - 11 << "\" width=\"28\" height=\"16\" fill=\"none\" stroke=\"black\"/>\n";
      }
      os << "<text x=\"" << cx << "\" y=\"" << cy << "\">" << label << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tube
