#pragma once

// Plain-text point lists: one "x y" pair per line, '#' starts a comment,
// blank lines are ignored. Used for packings and polygons alike. Writers emit
// 17 significant digits so files round-trip exactly.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kgon/geometry.hpp"
#include "kgon/packing.hpp"

namespace kgon {

std::vector<Point2> read_points(std::istream& in);
void write_points(std::ostream& out, std::span<const Point2> points);

UnitDiskPacking read_packing(const std::string& path);
void write_packing(const std::string& path, const UnitDiskPacking& packing);

// Vertices must be counterclockwise.
ConvexPolygon read_polygon(const std::string& path);
void write_polygon(const std::string& path, const ConvexPolygon& polygon);

}  // namespace kgon
