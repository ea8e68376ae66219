#pragma once

// Plane geometry kernel. All lengths are in units of the disk radius.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kgon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

// Incidence / tangency / turn tolerance at unit scale.
inline constexpr double kTol = 1e-9;
// Normalization tolerance for unit vectors and parallel tests.
inline constexpr double kNormTol = 1e-12;

// Raised when inputs violate a geometric precondition or an operation has no
// valid result (infeasible intersection, overlapping disks, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline Point2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point2 rotated(Point2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
// Counterclockwise quarter turn.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }
Point2 normalized(Point2 a);

// { p : p . normal <= offset } with a unit outward normal.
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;

  HalfPlane() = default;
  HalfPlane(Point2 normal, double offset);
  static HalfPlane from_angle(double angle, double offset) {
    return HalfPlane(unit_vector(angle), offset);
  }

  // Positive outside, negative inside.
  double signed_distance(Point2 p) const { return dot(p, normal) - offset; }
  bool contains(Point2 p, double tol = kTol) const { return signed_distance(p) <= tol; }
  double angle() const { return std::atan2(normal.y, normal.x); }
};

// Intersection point of the two boundary lines. Throws if they are parallel.
Point2 line_intersection(const HalfPlane& a, const HalfPlane& b);

// True when a -> b -> c turns strictly left (sine of the turn above kTol).
bool turns_left(Point2 a, Point2 b, Point2 c);

// Strictly convex polygon with counterclockwise vertices.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Cyclic vertex access.
  Point2 vertex(std::ptrdiff_t i) const;
  // Side i runs from vertex i to vertex i+1.
  HalfPlane side(std::size_t i) const;
  std::vector<HalfPlane> sides() const;
  double side_length(std::size_t i) const;
  double area() const;
  double perimeter() const;
  // Internal angle at vertex i, between side i-1 and side i.
  std::vector<double> internal_angles() const;
  bool contains(Point2 p, double tol = kTol) const;

 private:
  std::vector<Point2> vertices_;
};

// Simple (possibly non-convex) polygon of either orientation.
class SimplePolygon {
 public:
  explicit SimplePolygon(std::vector<Point2> vertices);
  explicit SimplePolygon(const ConvexPolygon& convex) : SimplePolygon(convex.vertices()) {}

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double signed_area() const;

 private:
  std::vector<Point2> vertices_;
};

// Edges of the closed chain meet only at shared endpoints.
bool is_simple(std::span<const Point2> vertices);

struct Segment {
  Point2 a;
  Point2 b;
  double length() const { return distance(a, b); }
};

using Hull = std::variant<ConvexPolygon, Segment>;

struct Strip {
  HalfPlane first;
  HalfPlane second;  // normal antiparallel to first.normal
  double width = 0.0;
};

struct Unbounded {
  std::vector<HalfPlane> halfplanes;
};

using Region = std::variant<ConvexPolygon, Strip, Unbounded>;

double polygon_area(std::span<const Point2> vertices);
double polygon_area(const ConvexPolygon& polygon);
double polygon_area(const SimplePolygon& polygon);

struct AngleReport {
  std::vector<double> angles;
  int reflex_count = 0;
};

AngleReport internal_angles(const SimplePolygon& polygon);

struct ParallelReport {
  bool is_parallel = false;
  bool reflex_equal = false;
  // Holds vacuously when neither polygon is convex.
  bool angles_equal_if_convex = false;
};

ParallelReport parallel_invariants(const SimplePolygon& p, const SimplePolygon& q);

Hull convex_hull(std::span<const Point2> points);

// Raw result of clipping a large square by half-planes. side_ids[i] is the
// index of the half-plane carrying the edge from vertices[i] to vertices[i+1],
// or -1 when the edge lies on the clipping box.
struct ClipResult {
  std::vector<Point2> vertices;
  std::vector<int> side_ids;
  bool empty = false;
  bool bounded = false;
};

ClipResult clip_halfplanes(std::span<const HalfPlane> halfplanes);

Region halfplane_intersection(std::span<const HalfPlane> halfplanes);

// The two outer common tangents of unit disks centred at c1 and c2, oriented
// so both disks lie inside.
std::array<HalfPlane, 2> outer_common_tangents(Point2 c1, Point2 c2);

// Parallel copy of `polygon` whose sides are the near-side tangents of the
// disk centred at centers[disk_index].
ConvexPolygon shrink(const ConvexPolygon& polygon, std::span<const Point2> centers,
                     std::size_t disk_index);

// Area between a unit disk and two tangent lines meeting at internal angle
// alpha: cot(alpha/2) - (pi - alpha)/2.
double cap_area_unit(double alpha);

}  // namespace kgon
