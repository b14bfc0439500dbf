#include "liecoh/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

struct Point {
  double x = 0, y = 0;
};

constexpr double kUnit = 40.0;   // pixels per lattice step
constexpr double kShaft = 6.0;   // double-shaft separation

Point embed(const RootLabel& r) {
  Point p;
  if (!r.coords.empty()) p.x = kUnit * r.coords[0];
  if (r.coords.size() >= 2) p.y = -kUnit * r.coords[1];
  if (r.coords.size() == 1) {
    // One-dimensional gradings climb vertically.
    p.y = -kUnit * r.coords[0];
    p.x = 0;
  }
  return p;
}

void arrow(std::ostringstream& out, Point from, Point to, int dim) {
  double dx = to.x - from.x, dy = to.y - from.y;
  double len = std::sqrt(dx * dx + dy * dy);
  if (len < 1e-9) return;
  double ux = dx / len, uy = dy / len;
  double px = -uy, py = ux;  // unit normal
  double head = 8.0;
  Point tip = to;
  Point base{to.x - head * ux, to.y - head * uy};
  const char* cls = dim >= 2 ? "root-arrow double" : "root-arrow";
  out << "  <g class=\"" << cls << "\">\n";
  if (dim >= 2) {
    for (double s : {-kShaft / 2, kShaft / 2}) {
      out << "    <line class=\"shaft\" x1=\"" << from.x + s * px << "\" y1=\""
          << from.y + s * py << "\" x2=\"" << base.x + s * px << "\" y2=\""
          << base.y + s * py << "\"/>\n";
    }
  } else {
    out << "    <line class=\"shaft\" x1=\"" << from.x << "\" y1=\"" << from.y
        << "\" x2=\"" << base.x << "\" y2=\"" << base.y << "\"/>\n";
  }
  out << "    <polygon class=\"head\" points=\"" << tip.x << "," << tip.y << " "
      << base.x + 4 * px << "," << base.y + 4 * py << " " << base.x - 4 * px << ","
      << base.y - 4 * py << "\"/>\n";
  if (dim >= 3) {
    out << "    <text class=\"mult-label\" x=\"" << to.x + 6 << "\" y=\"" << to.y + 4
        << "\">" << dim << "</text>\n";
  }
  out << "  </g>\n";
}

}  // namespace

std::string diagram_svg(const LieAlgebra& g) {
  size_t lattice_dim = g.root_base_names.size();
  if (lattice_dim > 2)
    throw Error("diagram: root lattice of " + g.name +
                " does not embed in the plane (unembeddable)");

  std::vector<RootLabel> roots = g.datum.positive_roots;
  roots.insert(roots.end(), g.datum.negative_roots.begin(), g.datum.negative_roots.end());

  // A root that is a multiple of a shorter colinear one stacks tail to head.
  auto tail_of = [&](const RootLabel& r) -> Point {
    for (const auto& other : roots) {
      if (other == r) continue;
      // other must be a proper fraction of r along the same ray.
      for (int k = 2; k <= 6; ++k) {
        RootLabel scaled = other;
        for (int& c : scaled.coords) c *= k;
        if (scaled == r) return embed(other);
      }
    }
    return Point{0, 0};
  };

  double extent = kUnit;
  for (const auto& r : roots) {
    Point p = embed(r);
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  }
  double margin = 24.0;
  double half = extent + margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << " " << -half
      << " " << 2 * half << " " << 2 * half << "\">\n";
  out << "  <style>.shaft{stroke:#000;stroke-width:1.5;fill:none}.head{fill:#000}"
      << ".cartan{fill:none;stroke:#000;stroke-width:1.5}"
      << ".mult-label{font-size:10px}</style>\n";
  if (g.datum.cartan_dim > 0) {
    out << "  <circle class=\"cartan\" cx=\"0\" cy=\"0\" r=\"5\"/>\n";
  }
  for (const auto& r : roots) {
    int dim = 1;
    auto it = g.datum.multiplicity.find(r);
    if (it != g.datum.multiplicity.end()) dim = it->second;
    arrow(out, tail_of(r), embed(r), dim);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace liecoh
