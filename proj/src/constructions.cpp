#include "kgon/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kgon/bounds.hpp"

namespace kgon {

namespace {

constexpr double kTangency = 1e-6;

// Distance from the disk centre to the side line, positive inside.
double clearance(const HalfPlane& side, Point2 center) { return -side.signed_distance(center); }

bool tangent(const HalfPlane& side, Point2 center) {
  return std::abs(clearance(side, center) - 1.0) <= kTangency;
}

ConvexPolygon bounded_polygon(const std::vector<HalfPlane>& halfplanes, std::size_t expected) {
  Region region = halfplane_intersection(halfplanes);
  auto* polygon = std::get_if<ConvexPolygon>(&region);
  if (polygon == nullptr) throw Error("construction is unbounded");
  if (polygon->size() != expected)
    throw Error("construction produced " + std::to_string(polygon->size()) + " sides, expected " +
                std::to_string(expected));
  return std::move(*polygon);
}

// Tightest half-plane with this normal containing every disk.
HalfPlane support(const UnitDiskPacking& packing, Point2 normal) {
  double best = -1e300;
  for (const Point2& c : packing.centers) best = std::max(best, dot(c, normal));
  return HalfPlane(normal, best + 1.0);
}

ConstructionOutput certify(ConvexPolygon polygon, UnitDiskPacking packing) {
  const int n = static_cast<int>(packing.size());
  const int k = static_cast<int>(polygon.size());
  EqualityReport report = verify_optimal(polygon, packing, n, k);
  return {std::move(polygon), std::move(packing), report};
}

// Cuts the sharpest corner (internal angle below 2pi/3) by the supporting
// tangent perpendicular to its bisector. Returns false when none is left.
bool cut_sharp_corner(ConvexPolygon& polygon, const UnitDiskPacking& packing) {
  const std::vector<double> angles = polygon.internal_angles();
  constexpr double kTarget = 2.0 * kPi / 3.0;
  std::size_t pick = angles.size();
  double deficiency = 1e-6;
  for (std::size_t i = 0; i < angles.size(); ++i)
    if (kTarget - angles[i] > deficiency + kTol) {
      deficiency = kTarget - angles[i];
      pick = i;
    }
  if (pick == angles.size()) return false;

  std::vector<HalfPlane> sides = polygon.sides();
  const HalfPlane& before = sides[(pick + sides.size() - 1) % sides.size()];
  const HalfPlane& after = sides[pick];
  sides.push_back(support(packing, normalized(before.normal + after.normal)));
  Region region = halfplane_intersection(sides);
  polygon = std::get<ConvexPolygon>(std::move(region));
  return true;
}

}  // namespace

ConvexPolygon unit_kgon(int k, Point2 center, double first_normal) {
  if (k < 3) throw std::invalid_argument("unit k-gon needs k >= 3");
  std::vector<HalfPlane> lines;
  for (int j = 0; j < k; ++j) {
    const Point2 u = unit_vector(first_normal + 2.0 * kPi * j / k);
    lines.emplace_back(u, dot(center, u) + 1.0);
  }
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i)
    vertices.push_back(line_intersection(lines[(i + lines.size() - 1) % lines.size()], lines[i]));
  return ConvexPolygon(std::move(vertices));
}

EqualityReport verify_optimal(const ConvexPolygon& polygon, const UnitDiskPacking& packing, int n,
                              int k) {
  if (static_cast<int>(polygon.size()) != k) throw std::invalid_argument("polygon does not have k sides");
  if (static_cast<int>(packing.size()) != n) throw std::invalid_argument("packing does not have n disks");
  const std::vector<HalfPlane> sides = polygon.sides();
  for (const Point2& c : packing.centers)
    for (const HalfPlane& s : sides)
      if (clearance(s, c) < 1.0 - kTol) throw Error("a disk is not contained in the polygon");

  EqualityReport r;
  r.each_side_tangent = std::all_of(sides.begin(), sides.end(), [&](const HalfPlane& s) {
    return std::any_of(packing.centers.begin(), packing.centers.end(),
                       [&](Point2 c) { return tangent(s, c); });
  });
  r.wegner_packed = classify(packing).tag == PackingTag::Wegner;
  r.caps_unit_disk = true;
  for (std::size_t i = 0; i < sides.size() && r.caps_unit_disk; ++i) {
    const HalfPlane& before = sides[(i + sides.size() - 1) % sides.size()];
    const HalfPlane& after = sides[i];
    r.caps_unit_disk = std::any_of(packing.centers.begin(), packing.centers.end(),
                                   [&](Point2 c) { return tangent(before, c) && tangent(after, c); });
  }
  const std::vector<double> angles = polygon.internal_angles();
  const auto [lo, hi] = std::minmax_element(angles.begin(), angles.end());
  r.equiangular = *hi - *lo <= kTol;
  r.area = polygon_area(polygon);
  r.bound = kgon_bound(n, k);
  r.optimal = r.each_side_tangent && r.wegner_packed && r.caps_unit_disk && r.equiangular &&
              std::abs(r.area - r.bound) < kTol;
  return r;
}

ConvexPolygon refine_caps(const ConvexPolygon& base, const UnitDiskPacking& packing, int factor) {
  if (factor < 1) throw std::invalid_argument("cap refinement factor must be positive");
  if (factor == 1) return base;
  const std::vector<HalfPlane> sides = base.sides();
  const std::size_t m = sides.size();
  std::vector<HalfPlane> lines;
  for (std::size_t i = 0; i < m; ++i) {
    // Corner between side i and side i+1.
    const HalfPlane& from = sides[i];
    const HalfPlane& to = sides[(i + 1) % m];
    const auto disk = std::find_if(packing.centers.begin(), packing.centers.end(),
                                   [&](Point2 c) { return tangent(from, c) && tangent(to, c); });
    if (disk == packing.centers.end()) throw Error("corner cap is not a unit-disk cap");
    double gap = to.angle() - from.angle();
    while (gap <= 0.0) gap += 2.0 * kPi;
    lines.push_back(from);
    for (int j = 1; j < factor; ++j) {
      const Point2 u = unit_vector(from.angle() + gap * j / factor);
      lines.emplace_back(u, dot(*disk, u) + 1.0);
    }
  }
  return bounded_polygon(lines, m * static_cast<std::size_t>(factor));
}

ConstructionOutput construct_two_disks(int k) {
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  if (k == 3) throw Error("use optimizer");
  UnitDiskPacking packing = generate_special(SpecialKind::Linear, 2);
  const Point2 left = packing.centers[0];
  const Point2 right = packing.centers[1];

  // Half unit 2q-gon around `center`, facing the side whose normal bisects
  // [start, start + pi].
  const auto half = [](std::vector<HalfPlane>& lines, Point2 center, int q, double start) {
    for (int j = 1; j < q; ++j) {
      const Point2 u = unit_vector(start + kPi * j / q);
      lines.emplace_back(u, dot(center, u) + 1.0);
    }
  };
  const int right_half = k / 2;
  const int left_half = k - k / 2;
  std::vector<HalfPlane> lines;
  lines.emplace_back(Point2{0.0, -1.0}, 1.0);
  half(lines, right, right_half, -kPi / 2.0);
  lines.emplace_back(Point2{0.0, 1.0}, 1.0);
  half(lines, left, left_half, kPi / 2.0);
  ConvexPolygon polygon = bounded_polygon(lines, static_cast<std::size_t>(k));
  return certify(std::move(polygon), std::move(packing));
}

ConstructionOutput construct_triangle_family(int n, int k) {
  if (n != 3 && n != 6) throw std::invalid_argument("triangle family needs n in {3, 6}");
  if (k < 3 || k % 3 != 0) throw std::invalid_argument("triangle family needs k = 3k'");
  UnitDiskPacking packing = generate_special(SpecialKind::Triangular, n == 3 ? 2 : 3);
  Region tangent = tangent_polygon(packing);
  const ConvexPolygon& triangle = std::get<ConvexPolygon>(tangent);
  ConvexPolygon polygon = refine_caps(triangle, packing, k / 3);
  return certify(std::move(polygon), std::move(packing));
}

ConstructionOutput construct_hexagon_family(int n, int k) {
  if (n < 1) throw std::invalid_argument("number of disks must be at least 1");
  if (n == 2) throw Error("two disks use the rectangle construction");
  if (n > 120) throw Error("exceptionality not decided by this artifact");
  if (k < 6 || k % 6 != 0) throw std::invalid_argument("hexagon family needs k = 6k'");
  UnitDiskPacking packing = generate_wegner(n);

  ConvexPolygon hexagon = unit_kgon(6, packing.centers.front());
  if (n > 1) {
    Region tangent = tangent_polygon(packing);
    hexagon = std::get<ConvexPolygon>(std::move(tangent));
    while (cut_sharp_corner(hexagon, packing)) {
    }
    if (hexagon.size() != 6) throw Error("corner cutting did not reach a hexagon");
  }
  ConvexPolygon polygon = refine_caps(hexagon, packing, k / 6);
  return certify(std::move(polygon), std::move(packing));
}

ConstructionOutput construct(int n, int k) {
  if (n < 1) throw std::invalid_argument("number of disks must be at least 1");
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  if (n == 1) {
    UnitDiskPacking single{{Point2{}}};
    return certify(unit_kgon(k), std::move(single));
  }
  if (n == 2) return construct_two_disks(k);
  if ((n == 3 || n == 6) && k % 3 == 0) return construct_triangle_family(n, k);
  if (k % 6 == 0) return construct_hexagon_family(n, k);
  throw Error("no optimal construction known for n = " + std::to_string(n) +
              ", k = " + std::to_string(k));
}

ReferenceAreas three_disk_reference_areas() {
  const UnitDiskPacking packing = generate_special(SpecialKind::Triangular, 2);
  Region tangent = tangent_polygon(packing);
  const ConvexPolygon& abc = std::get<ConvexPolygon>(tangent);

  // Corner of the tangent triangle nearest to each disk, and its two sides.
  struct Corner {
    Point2 vertex;
    HalfPlane side_in;   // side ending at the vertex
    HalfPlane side_out;  // side starting at the vertex
    HalfPlane cut;
  };
  std::vector<Corner> corners;
  for (const Point2& c : packing.centers) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < abc.size(); ++i)
      if (distance(abc.vertex(static_cast<std::ptrdiff_t>(i)), c) <
          distance(abc.vertex(static_cast<std::ptrdiff_t>(best)), c))
        best = i;
    const Point2 v = abc.vertex(static_cast<std::ptrdiff_t>(best));
    const Point2 w = normalized(v - c);
    corners.push_back({v, abc.side((best + abc.size() - 1) % abc.size()), abc.side(best),
                       HalfPlane(w, dot(c, w) + 1.0)});
  }
  // Centers run counterclockwise, so corners are A, B, C in order and side AB
  // is corners[0].side_out.
  const Corner& a = corners[0];
  const Corner& b = corners[1];
  const Corner& c = corners[2];

  const Point2 a1 = line_intersection(a.cut, a.side_out);  // A' on AB
  const Point2 a2 = line_intersection(a.cut, a.side_in);   // A'' on AC
  const std::vector<Point2> quad = {a1, b.vertex, c.vertex, a2};

  const Point2 b1 = line_intersection(b.cut, b.side_out);  // B' on BC
  const Point2 c2 = line_intersection(c.cut, c.side_in);   // C'' on CB
  const Point2 q = line_intersection(b.cut, c.cut);
  const std::vector<Point2> tri = {b1, q, c2};

  const UnitDiskPacking row = generate_special(SpecialKind::Linear, 3);
  Region strip = tangent_polygon(row);
  const Strip& s = std::get<Strip>(strip);
  const std::vector<HalfPlane> box = {s.first, s.second,
                                      support(row, {1.0, 0.0}), support(row, {-1.0, 0.0})};

  ReferenceAreas out;
  out.hull = hull_metrics(packing).hull_area;
  out.cut_quadrilateral = polygon_area(quad);
  out.corner_triangle = polygon_area(tri);
  out.linear_rectangle = polygon_area(bounded_polygon(box, 4));
  return out;
}

}  // namespace kgon
