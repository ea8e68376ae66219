#include "kgon/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace kgon {

namespace {

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string style_attributes(const Style& s) {
  return "fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + fixed(s.stroke_width) +
         "\"";
}

struct Bounds {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = std::numeric_limits<double>::infinity();
  double hi_x = -std::numeric_limits<double>::infinity();
  double hi_y = -std::numeric_limits<double>::infinity();

  void add(Point2 p, double pad = 0.0) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error("scene coordinate is not finite");
    lo_x = std::min(lo_x, p.x - pad), hi_x = std::max(hi_x, p.x + pad);
    lo_y = std::min(lo_y, p.y - pad), hi_y = std::max(hi_y, p.y + pad);
  }
};

}  // namespace

void render_svg(const Scene& scene, std::ostream& out) {
  if (scene.polygons.empty() && scene.disks.empty() && scene.curves.empty())
    throw Error("empty scene");
  Bounds box;
  for (const auto& p : scene.polygons)
    for (Point2 v : p.vertices) box.add(v);
  for (const auto& d : scene.disks) box.add(d.center, 1.0);
  for (const auto& c : scene.curves)
    for (Point2 v : c.points) box.add(v);

  const double margin = 0.05 * std::max({box.hi_x - box.lo_x, box.hi_y - box.lo_y, 1.0});
  const double x0 = box.lo_x - margin;
  const double y0 = -box.hi_y - margin;  // flipped
  const double w = box.hi_x - box.lo_x + 2.0 * margin;
  const double h = box.hi_y - box.lo_y + 2.0 * margin;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed(x0) << ' ' << fixed(y0) << ' '
      << fixed(w) << ' ' << fixed(h) << "\">\n";
  for (const auto& d : scene.disks)
    out << "  <circle cx=\"" << fixed(d.center.x) << "\" cy=\"" << fixed(-d.center.y)
        << "\" r=\"1.000000\" " << style_attributes(d.style) << "/>\n";
  for (const auto& p : scene.polygons) {
    out << "  <path d=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      out << (i == 0 ? "M " : " L ") << fixed(p.vertices[i].x) << ' ' << fixed(-p.vertices[i].y);
    out << " Z\" " << style_attributes(p.style) << "/>\n";
  }
  for (const auto& c : scene.curves) {
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i)
      out << (i == 0 ? "" : " ") << fixed(c.points[i].x) << ',' << fixed(-c.points[i].y);
    out << "\" " << style_attributes(c.style) << "/>\n";
  }
  out << "</svg>\n";
}

void render_svg(const Scene& scene, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  render_svg(scene, file);
  if (!file) throw Error("cannot write " + path);
}

}  // namespace kgon
