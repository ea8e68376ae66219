#include "kgon/text_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kgon {

std::vector<Point2> read_points(std::istream& in) {
  std::vector<Point2> points;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Point2 p;
    if (!(fields >> p.x)) {
      if (fields.eof() && line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error("line " + std::to_string(number) + ": expected \"x y\"");
    }
    std::string extra;
    if (!(fields >> p.y) || (fields >> extra))
      throw Error("line " + std::to_string(number) + ": expected \"x y\"");
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error("line " + std::to_string(number) + ": coordinates must be finite");
    points.push_back(p);
  }
  return points;
}

void write_points(std::ostream& out, std::span<const Point2> points) {
  char line[96];
  for (const Point2& p : points) {
    std::snprintf(line, sizeof line, "%.17g %.17g\n", p.x, p.y);
    out << line;
  }
}

namespace {

std::vector<Point2> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_points(in);
}

void write_file(const std::string& path, std::span<const Point2> points) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_points(out, points);
  if (!out) throw Error("cannot write " + path);
}

}  // namespace

UnitDiskPacking read_packing(const std::string& path) { return {read_file(path)}; }

void write_packing(const std::string& path, const UnitDiskPacking& packing) {
  write_file(path, packing.centers);
}

ConvexPolygon read_polygon(const std::string& path) { return ConvexPolygon(read_file(path)); }

void write_polygon(const std::string& path, const ConvexPolygon& polygon) {
  write_file(path, polygon.vertices());
}

}  // namespace kgon
