#include "skewtab/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace skewtab {

namespace {

struct Point {
  double x, y;
};

const double kRoot3 = std::sqrt(3.0);

Point project(double u, double v) { return {u - 0.5 * v, 0.5 * kRoot3 * v}; }

struct Canvas {
  double minx = std::numeric_limits<double>::infinity(), maxx = -minx;
  double miny = minx, maxy = -minx;
  double scale;

  explicit Canvas(const Region& r, double s) : scale(s) {
    for (Vertex p : r.vertices()) {
      const Point q = project(p.u, p.v);
      minx = std::min(minx, q.x);
      maxx = std::max(maxx, q.x);
      miny = std::min(miny, q.y);
      maxy = std::max(maxy, q.y);
    }
  }
  // SVG y grows downward; flip so that e2 points up.
  [[nodiscard]] Point map(double u, double v) const {
    const Point q = project(u, v);
    return {(q.x - minx) * scale + scale, (maxy - q.y) * scale + scale};
  }
  void open(std::ostringstream& os) const {
    const double w = (maxx - minx + 2.0) * scale, h = (maxy - miny + 2.0) * scale;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  }
};

void polygon(std::ostringstream& os, const Canvas& c, std::initializer_list<Vertex> pts, const std::string& fill) {
  os << "<polygon points=\"";
  for (Vertex p : pts) {
    const Point q = c.map(p.u, p.v);
    os << q.x << ',' << q.y << ' ';
  }
  os << "\" fill=\"" << fill << "\" stroke=\"#222\" stroke-width=\"0.6\"/>\n";
}

std::string rgb(double r, double g, double b) {
  std::ostringstream os;
  os << "rgb(" << std::lround(255 * r) << ',' << std::lround(255 * g) << ',' << std::lround(255 * b) << ')';
  return os.str();
}

constexpr double kColors[3][3] = {{0.86, 0.38, 0.32}, {0.30, 0.55, 0.80}, {0.95, 0.85, 0.45}};

}  // namespace

std::string render_tiling_svg(const Tiling& t, const HeightFunction& h, const RenderOptions& opt) {
  const Region& r = h.region();
  Canvas c(r, opt.scale);
  std::ostringstream os;
  os.precision(6);
  c.open(os);
  for (const Lozenge& z : t) {
    const Vertex v = z.anchor;
    const auto& col = kColors[z.type - 1];
    const std::string fill = rgb(col[0], col[1], col[2]);
    switch (z.type) {
      case 1: polygon(os, c, {v - kE2, v + kE1, v + kDiag, v}, fill); break;
      case 2: polygon(os, c, {v, v + kE1, v + kE1 + kDiag, v + kDiag}, fill); break;
      default: polygon(os, c, {v, v + kE1, v + kDiag, v + kE2}, fill); break;
    }
  }
  if (opt.height_labels) {
    for (Vertex p : r.vertices()) {
      const Point q = c.map(p.u, p.v);
      os << "<text x=\"" << q.x << "\" y=\"" << q.y << "\" font-size=\"" << opt.scale * 0.35
         << "\" text-anchor=\"middle\">" << h.at(p) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_density_svg(const DensityField& d, const RenderOptions& opt) {
  const Region& r = d.region();
  Canvas c(r, opt.scale);
  std::ostringstream os;
  os.precision(6);
  c.open(os);
  for (Vertex v : d.anchors()) {
    double mix[3] = {0, 0, 0};
    for (int type = 1; type <= 3; ++type) {
      const double f = d.freq(v, type);
      for (int k = 0; k < 3; ++k) mix[k] += f * kColors[type - 1][k];
    }
    const std::string fill = rgb(mix[0], mix[1], mix[2]);
    os << "<polygon points=\"";
    for (Vertex p : {v, v + kE1, v + kDiag}) {
      const Point q = c.map(p.u, p.v);
      os << q.x << ',' << q.y << ' ';
    }
    os << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace skewtab
