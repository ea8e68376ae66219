#pragma once

// Standalone SVG figures of polygons, unit disks and sampled curves.

#include <iosfwd>
#include <string>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double stroke_width = 0.05;
};

struct Scene {
  struct Polygon {
    std::vector<Point2> vertices;
    Style style;
  };
  struct Disk {
    Point2 center;
    Style style{"steelblue", "lightsteelblue", 0.03};
  };
  struct Curve {
    std::vector<Point2> points;
    Style style{"firebrick", "none", 0.03};
  };

  std::vector<Polygon> polygons;
  std::vector<Disk> disks;
  std::vector<Curve> curves;

  void add(const ConvexPolygon& polygon, Style style = {}) {
    polygons.push_back({polygon.vertices(), std::move(style)});
  }
};

// Disks have radius 1. The y axis is flipped so the figure renders with the
// mathematical orientation; the viewBox leaves a 5% margin around the
// geometry. Throws kgon::Error for an empty or non-finite scene.
void render_svg(const Scene& scene, std::ostream& out);
void render_svg(const Scene& scene, const std::string& path);

}  // namespace kgon
