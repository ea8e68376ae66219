#include "kgon/packing.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "kgon/bounds.hpp"

namespace kgon {

namespace {

// Triangular lattice of spacing 2: (s, t) -> s * (2, 0) + t * (1, sqrt 3).
Point2 lattice_point(long s, long t) {
  return {2.0 * static_cast<double>(s) + static_cast<double>(t), kSqrt3 * static_cast<double>(t)};
}

constexpr double kLatticeTol = 1e-6;

double center_perimeter(const Hull& hull) {
  if (const auto* seg = std::get_if<Segment>(&hull)) return 2.0 * seg->length();
  return std::get<ConvexPolygon>(hull).perimeter();
}

bool lattice_groemer(const UnitDiskPacking& packing, const ConvexPolygon& hull) {
  const auto& c = packing.centers;
  const std::size_t n = c.size();

  std::optional<std::pair<std::size_t, std::size_t>> base;
  for (std::size_t i = 0; i < n && !base; ++i)
    for (std::size_t j = i + 1; j < n && !base; ++j)
      if (std::abs(distance(c[i], c[j]) - 2.0) <= kLatticeTol) base = {i, j};
  if (!base) return false;

  const Point2 origin = c[base->first];
  const Point2 a = c[base->second] - origin;
  const Point2 b = rotated(a, kPi / 3.0);
  const double det = cross(a, b);

  std::set<std::pair<long, long>> occupied;
  long s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
  for (const Point2& p : c) {
    const Point2 v = p - origin;
    const double s = cross(v, b) / det;
    const double t = cross(a, v) / det;
    const double sr = std::round(s), tr = std::round(t);
    if (std::abs(s - sr) > kLatticeTol || std::abs(t - tr) > kLatticeTol) return false;
    const auto si = static_cast<long>(sr), ti = static_cast<long>(tr);
    occupied.insert({si, ti});
    s_lo = std::min(s_lo, si), s_hi = std::max(s_hi, si);
    t_lo = std::min(t_lo, ti), t_hi = std::max(t_hi, ti);
  }

  // Full occupancy: every lattice point in the center hull is a center.
  const auto at = [&](long s, long t) { return origin + static_cast<double>(s) * a + static_cast<double>(t) * b; };
  for (long s = s_lo; s <= s_hi; ++s)
    for (long t = t_lo; t <= t_hi; ++t)
      if (hull.contains(at(s, t), kLatticeTol) && !occupied.contains({s, t})) return false;

  // The unit triangles spanned by centers tile the hull.
  long triangles = 0;
  for (const auto& [s, t] : occupied) {
    if (!occupied.contains({s + 1, t})) continue;
    if (occupied.contains({s, t + 1})) ++triangles;
    if (occupied.contains({s + 1, t - 1})) ++triangles;
  }
  return std::abs(hull.area() - static_cast<double>(triangles) * kSqrt3) <= kLatticeTol;
}

// Equiangular lattice hexagon given by its six side lengths in lattice steps.
struct LatticeHexagon {
  std::array<int, 6> sides{};

  int perimeter() const {
    int p = 0;
    for (int s : sides) p += s;
    return p;
  }
  // Unit lattice triangles covered.
  int triangles() const {
    const int big = sides[0] + sides[1] + sides[2];
    return big * big - sides[0] * sides[0] - sides[2] * sides[2] - sides[4] * sides[4];
  }
  // Pick's theorem on the triangular lattice.
  int points() const { return (triangles() + perimeter() + 2) / 2; }
};

std::vector<Point2> hexagon_centers(const LatticeHexagon& hex) {
  static constexpr std::array<std::array<long, 2>, 6> kSteps = {
      {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  std::vector<Point2> corners;
  long s = 0, t = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    corners.push_back(lattice_point(s, t));
    s += kSteps[i][0] * hex.sides[i];
    t += kSteps[i][1] * hex.sides[i];
  }
  const ConvexPolygon outline = std::get<ConvexPolygon>(convex_hull(corners));
  const long reach = hex.perimeter();
  std::vector<Point2> centers;
  for (long tt = -reach; tt <= reach; ++tt)
    for (long ss = -reach; ss <= reach; ++ss)
      if (const Point2 p = lattice_point(ss, tt); outline.contains(p, kLatticeTol))
        centers.push_back(p);
  return centers;
}

}  // namespace

std::vector<OverlapViolation> validate(const UnitDiskPacking& packing) {
  std::vector<OverlapViolation> out;
  const auto& c = packing.centers;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (const double d = distance(c[i], c[j]); d < 2.0 - kTol) out.push_back({i, j, d});
  return out;
}

HullMetrics hull_metrics(const UnitDiskPacking& packing) {
  if (packing.centers.empty()) throw Error("hull of an empty packing");
  const Hull hull = convex_hull(packing.centers);
  HullMetrics m;
  if (const auto* poly = std::get_if<ConvexPolygon>(&hull)) m.center_hull_area = poly->area();
  m.center_hull_perimeter = center_perimeter(hull);
  // Offsetting a convex set by a unit disk adds perimeter + pi to its area.
  m.hull_area = m.center_hull_area + m.center_hull_perimeter + kPi;
  m.hull_perimeter = m.center_hull_perimeter + 2.0 * kPi;
  return m;
}

Region tangent_polygon(const UnitDiskPacking& packing) {
  const auto& c = packing.centers;
  if (c.size() < 2) throw Error("tangent polygon needs at least two disks");
  if (!is_valid(packing)) throw Error("overlap");

  std::vector<HalfPlane> joint;
  const auto known = [&](const HalfPlane& h) {
    return std::any_of(joint.begin(), joint.end(), [&](const HalfPlane& g) {
      return norm(g.normal - h.normal) <= kTol && std::abs(g.offset - h.offset) <= kTol;
    });
  };
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      for (const HalfPlane& h : outer_common_tangents(c[i], c[j])) {
        const bool supports = std::all_of(c.begin(), c.end(), [&](Point2 p) {
          return h.signed_distance(p) <= -1.0 + kTol;
        });
        if (supports && !known(h)) joint.push_back(h);
      }
  return halfplane_intersection(joint);
}

std::string_view to_string(PackingTag tag) {
  switch (tag) {
    case PackingTag::NotGroemer: return "NotGroemer";
    case PackingTag::Groemer: return "Groemer";
    case PackingTag::Wegner: return "Wegner";
  }
  return "NotGroemer";
}

PackingClass classify(const UnitDiskPacking& packing) {
  PackingClass result;
  const std::size_t n = packing.size();
  if (n == 0) return result;
  const Hull hull = convex_hull(packing.centers);
  result.hull_perimeter = center_perimeter(hull);
  result.required_perimeter = 2.0 * ceil_term(static_cast<int>(n));
  if (!is_valid(packing)) return result;

  bool groemer = false;
  if (const auto* seg = std::get_if<Segment>(&hull))
    groemer = std::abs(seg->length() - 2.0 * static_cast<double>(n - 1)) <= kTol;
  else
    groemer = lattice_groemer(packing, std::get<ConvexPolygon>(hull));

  if (groemer)
    result.tag = std::abs(result.hull_perimeter - result.required_perimeter) < kTol
                     ? PackingTag::Wegner
                     : PackingTag::Groemer;
  return result;
}

UnitDiskPacking generate_wegner(int n) {
  if (n < 1) throw std::invalid_argument("number of disks must be at least 1");
  if (n > 120) throw Error("exceptionality not decided by this artifact");
  if (n <= 2) return generate_special(SpecialKind::Linear, n);

  // Equiangular lattice hexagons of the required perimeter, in lexicographic
  // order of (a1, a2, a3, a1 - a4). Closure: a1 - a4 = a5 - a2 = a3 - a6.
  const int p = ceil_term(n);
  for (int a1 = 0; a1 <= p; ++a1)
    for (int a2 = 0; a1 + a2 <= p; ++a2)
      for (int a3 = 0; a1 + a2 + a3 <= p; ++a3)
        for (int d = -p; d <= p; ++d) {
          const LatticeHexagon hex{{a1, a2, a3, a1 - d, a2 + d, a3 - d}};
          if (hex.sides[3] < 0 || hex.sides[4] < 0 || hex.sides[5] < 0) continue;
          if (hex.perimeter() != p || hex.triangles() <= 0) continue;
          if (hex.points() == n) return UnitDiskPacking{hexagon_centers(hex)};
        }
  throw Error("no Wegner packing found");
}

UnitDiskPacking generate_special(SpecialKind kind, int size) {
  if (size < 1) throw std::invalid_argument("packing size parameter must be at least 1");
  UnitDiskPacking packing;
  switch (kind) {
    case SpecialKind::CenteredHexagonal: {
      const long r = size - 1;
      for (long t = -r; t <= r; ++t)
        for (long s = -r; s <= r; ++s)
          if (std::abs(s + t) <= r) packing.centers.push_back(lattice_point(s, t));
      break;
    }
    case SpecialKind::Triangular:
      for (long t = 0; t < size; ++t)
        for (long s = 0; s + t < size; ++s) packing.centers.push_back(lattice_point(s, t));
      break;
    case SpecialKind::Linear:
      for (int i = 0; i < size; ++i) packing.centers.push_back({2.0 * i, 0.0});
      break;
  }
  return packing;
}

}  // namespace kgon
