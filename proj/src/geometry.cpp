#include "kgon/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kgon {

Point2 normalized(Point2 a) {
  const double len = norm(a);
  if (!(len > 0.0)) throw Error("cannot normalize a zero vector");
  return a / len;
}

HalfPlane::HalfPlane(Point2 n, double off) : normal(n), offset(off) {
  const double len = norm(n);
  if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(off))
    throw Error("half-plane needs a finite nonzero normal");
  if (std::abs(len - 1.0) > kNormTol) {
    normal = n / len;
    offset = off / len;
  }
}

Point2 line_intersection(const HalfPlane& a, const HalfPlane& b) {
  const double det = cross(a.normal, b.normal);
  if (std::abs(det) <= kNormTol) throw Error("parallel lines do not intersect");
  return {(a.offset * b.normal.y - a.normal.y * b.offset) / det,
          (a.normal.x * b.offset - a.offset * b.normal.x) / det};
}

bool turns_left(Point2 a, Point2 b, Point2 c) {
  const Point2 e1 = b - a;
  const Point2 e2 = c - b;
  return cross(e1, e2) > kTol * norm(e1) * norm(e2);
}

namespace {

double shoelace(std::span<const Point2> v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Signed turning angle from edge a to edge b, in (-pi, pi].
double turn_angle(Point2 a, Point2 b) { return std::atan2(cross(a, b), dot(a, b)); }

bool on_segment(Point2 p, Point2 a, Point2 b, double eps) {
  const Point2 ab = b - a;
  const double len = norm(ab);
  if (len <= eps) return distance(p, a) <= eps;
  if (std::abs(cross(ab, p - a)) / len > eps) return false;
  const double t = dot(p - a, ab) / (len * len);
  return t >= -eps / len && t <= 1.0 + eps / len;
}

bool segments_touch(Point2 p1, Point2 p2, Point2 q1, Point2 q2, double eps) {
  const double d1 = cross(q2 - q1, p1 - q1);
  const double d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1);
  const double d4 = cross(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  return on_segment(p1, q1, q2, eps) || on_segment(p2, q1, q2, eps) ||
         on_segment(q1, p1, p2, eps) || on_segment(q2, p1, p2, eps);
}

}  // namespace

bool is_simple(std::span<const Point2> v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  double scale = 1.0;
  for (const Point2& p : v) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double eps = kTol * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n];
    if (distance(a, b) <= eps) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 c = v[j], d = v[(j + 1) % n];
      const bool next = j == i + 1;
      const bool prev = i == 0 && j == n - 1;
      if (next) {
        // Shares b == c; the far endpoints must not fold back onto the other edge.
        if (on_segment(d, a, b, eps) || on_segment(a, c, d, eps)) return false;
      } else if (prev) {
        // Shares a == d.
        if (on_segment(c, a, b, eps) || on_segment(b, c, d, eps)) return false;
      } else if (segments_touch(a, b, c, d, eps)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error("convex polygon needs at least 3 vertices");
  for (const Point2& p : vertices_)
    if (!finite(p)) throw Error("polygon vertex is not finite");
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertex(static_cast<std::ptrdiff_t>(i) - 1);
    const Point2 b = vertices_[i];
    const Point2 c = vertex(static_cast<std::ptrdiff_t>(i) + 1);
    if (distance(b, c) <= kTol) throw Error("polygon has coincident consecutive vertices");
    if (!turns_left(a, b, c)) throw Error("polygon is not strictly convex and counterclockwise");
    turning += turn_angle(b - a, c - b);
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-6) throw Error("polygon winds more than once");
}

Point2 ConvexPolygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

HalfPlane ConvexPolygon::side(std::size_t i) const {
  const Point2 a = vertices_[i % size()];
  const Point2 b = vertices_[(i + 1) % size()];
  const Point2 dir = normalized(b - a);
  const Point2 outward{dir.y, -dir.x};
  return HalfPlane(outward, dot(a, outward));
}

std::vector<HalfPlane> ConvexPolygon::sides() const {
  std::vector<HalfPlane> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(side(i));
  return out;
}

double ConvexPolygon::side_length(std::size_t i) const {
  return distance(vertices_[i % size()], vertices_[(i + 1) % size()]);
}

double ConvexPolygon::area() const { return shoelace(vertices_); }

double ConvexPolygon::perimeter() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < size(); ++i) sum += side_length(i);
  return sum;
}

std::vector<double> ConvexPolygon::internal_angles() const {
  std::vector<double> angles;
  angles.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto si = static_cast<std::ptrdiff_t>(i);
    const Point2 e_in = vertex(si) - vertex(si - 1);
    const Point2 e_out = vertex(si + 1) - vertex(si);
    angles.push_back(kPi - turn_angle(e_in, e_out));
  }
  return angles;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (side(i).signed_distance(p) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SimplePolygon

SimplePolygon::SimplePolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (!finite(vertices_[i])) throw Error("polygon vertex is not finite");
    if (distance(vertices_[i], vertices_[(i + 1) % n]) <= kTol)
      throw Error("degenerate vertex: zero-length edge");
  }
  if (!is_simple(vertices_)) throw Error("polygon is not simple");
}

double SimplePolygon::signed_area() const { return shoelace(vertices_); }

// ---------------------------------------------------------------------------

double polygon_area(std::span<const Point2> vertices) {
  if (vertices.size() < 3) throw Error("polygon needs at least 3 vertices");
  const double a = std::abs(shoelace(vertices));
  if (a <= kTol) throw Error("degenerate polygon");
  return a;
}

double polygon_area(const ConvexPolygon& polygon) { return polygon_area(polygon.vertices()); }
double polygon_area(const SimplePolygon& polygon) { return polygon_area(polygon.vertices()); }

AngleReport internal_angles(const SimplePolygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  const double orientation = polygon.signed_area() > 0.0 ? 1.0 : -1.0;
  AngleReport report;
  report.angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 prev = v[(i + n - 1) % n];
    const Point2 next = v[(i + 1) % n];
    const double alpha = kPi - orientation * turn_angle(v[i] - prev, next - v[i]);
    report.angles.push_back(alpha);
    if (alpha > kPi + kTol) ++report.reflex_count;
  }
  return report;
}

ParallelReport parallel_invariants(const SimplePolygon& p, const SimplePolygon& q) {
  if (p.size() != q.size()) throw Error("parallel test needs equal vertex counts");
  if ((p.signed_area() > 0.0) != (q.signed_area() > 0.0))
    throw Error("parallel test needs equal orientation");
  const std::size_t n = p.size();
  const auto& a = p.vertices();
  const auto& b = q.vertices();

  ParallelReport report;
  report.is_parallel = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 da = normalized(a[(i + 1) % n] - a[i]);
    const Point2 db = normalized(b[(i + 1) % n] - b[i]);
    if (std::abs(cross(da, db)) > kTol) {
      report.is_parallel = false;
      break;
    }
  }

  const AngleReport pa = internal_angles(p);
  const AngleReport qa = internal_angles(q);
  report.reflex_equal = pa.reflex_count == qa.reflex_count;

  const bool p_convex = pa.reflex_count == 0;
  const bool q_convex = qa.reflex_count == 0;
  if (p_convex || q_convex) {
    report.angles_equal_if_convex = p_convex && q_convex;
    for (std::size_t i = 0; i < n && report.angles_equal_if_convex; ++i)
      if (std::abs(pa.angles[i] - qa.angles[i]) > kTol) report.angles_equal_if_convex = false;
  } else {
    report.angles_equal_if_convex = true;
  }
  return report;
}

Hull convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw Error("convex hull of an empty point set");
  std::vector<Point2> pts(points.begin(), points.end());
  for (const Point2& p : pts)
    if (!finite(p)) throw Error("hull input is not finite");
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) { return distance(a, b) <= kTol; }),
            pts.end());
  if (pts.size() < 3) return Segment{pts.front(), pts.back()};

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return Segment{pts.front(), pts.back()};
  return ConvexPolygon(std::move(hull));
}

// ---------------------------------------------------------------------------
// Half-plane intersection by clipping a large square.

namespace {

struct ClipVertex {
  Point2 p;
  int out_line;  // line carrying the edge to the next vertex
};

Point2 clip_point(const HalfPlane& edge, const HalfPlane& cut, Point2 from, Point2 to) {
  if (std::abs(cross(edge.normal, cut.normal)) > kNormTol) return line_intersection(edge, cut);
  const double s0 = cut.signed_distance(from);
  const double s1 = cut.signed_distance(to);
  return from + (s0 / (s0 - s1)) * (to - from);
}

}  // namespace

ClipResult clip_halfplanes(std::span<const HalfPlane> halfplanes) {
  const int n_input = static_cast<int>(halfplanes.size());
  double reach = 0.0;
  for (const HalfPlane& h : halfplanes) reach = std::max(reach, std::abs(h.offset));
  const double box = 1e6 + 10.0 * reach;

  std::vector<HalfPlane> lines(halfplanes.begin(), halfplanes.end());
  lines.emplace_back(Point2{0, -1}, box);
  lines.emplace_back(Point2{1, 0}, box);
  lines.emplace_back(Point2{0, 1}, box);
  lines.emplace_back(Point2{-1, 0}, box);

  std::vector<ClipVertex> poly = {{{-box, -box}, n_input},
                                  {{box, -box}, n_input + 1},
                                  {{box, box}, n_input + 2},
                                  {{-box, box}, n_input + 3}};
  std::vector<ClipVertex> next;
  ClipResult result;

  for (int li = 0; li < n_input && !poly.empty(); ++li) {
    const HalfPlane& cut = lines[static_cast<std::size_t>(li)];
    next.clear();
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      const ClipVertex& cur = poly[i];
      const ClipVertex& nxt = poly[(i + 1) % m];
      const double sc = cut.signed_distance(cur.p);
      const double sn = cut.signed_distance(nxt.p);
      const bool cur_in = sc <= 0.0;
      const bool nxt_in = sn <= 0.0;
      const HalfPlane& edge = lines[static_cast<std::size_t>(cur.out_line)];
      if (cur_in) next.push_back(cur);
      if (cur_in && !nxt_in) {
        if (sc < 0.0)
          next.push_back({clip_point(edge, cut, cur.p, nxt.p), li});
        else
          next.back().out_line = li;
      } else if (!cur_in && nxt_in && sn < 0.0) {
        next.push_back({clip_point(edge, cut, cur.p, nxt.p), cur.out_line});
      }
    }
    poly.swap(next);
    if (poly.size() < 3) poly.clear();
  }

  // Drop coincident and collinear vertices left by concurrent or repeated lines.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point2 prev = poly[(i + m - 1) % m].p;
      const Point2 cur = poly[i].p;
      const Point2 nxt = poly[(i + 1) % m].p;
      const double scale = std::max({1.0, norm(cur), norm(nxt)});
      if (distance(cur, nxt) <= kTol * scale) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      const Point2 e1 = cur - prev, e2 = nxt - cur;
      if (std::abs(cross(e1, e2)) <= kTol * norm(e1) * norm(e2) && dot(e1, e2) > 0.0) {
        poly[(i + m - 1) % m].out_line =
            poly[(i + m - 1) % m].out_line < n_input ? poly[(i + m - 1) % m].out_line
                                                      : poly[i].out_line;
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  std::vector<Point2> verts;
  for (const ClipVertex& v : poly) verts.push_back(v.p);
  if (poly.size() < 3 || shoelace(verts) <= kTol) {
    result.empty = true;
    return result;
  }
  result.bounded = true;
  for (const ClipVertex& v : poly) {
    result.vertices.push_back(v.p);
    if (v.out_line >= n_input) {
      result.bounded = false;
      result.side_ids.push_back(-1);
    } else {
      result.side_ids.push_back(v.out_line);
    }
  }
  return result;
}

Region halfplane_intersection(std::span<const HalfPlane> halfplanes) {
  if (halfplanes.size() < 2) throw Error("half-plane intersection needs at least 2 half-planes");
  ClipResult clip = clip_halfplanes(halfplanes);
  if (clip.empty) throw Error("infeasible");
  if (clip.bounded) return ConvexPolygon(std::move(clip.vertices));

  std::set<int> active;
  for (int id : clip.side_ids)
    if (id >= 0) active.insert(id);
  std::vector<HalfPlane> boundary;
  for (int id : active) boundary.push_back(halfplanes[static_cast<std::size_t>(id)]);

  if (boundary.size() == 2) {
    const HalfPlane& a = boundary[0];
    const HalfPlane& b = boundary[1];
    if (std::abs(cross(a.normal, b.normal)) <= kNormTol && dot(a.normal, b.normal) < 0.0) {
      const double width = a.offset - dot(b.normal * b.offset, a.normal);
      if (width <= kTol) throw Error("infeasible");
      return Strip{a, b, width};
    }
  }
  return Unbounded{std::move(boundary)};
}

std::array<HalfPlane, 2> outer_common_tangents(Point2 c1, Point2 c2) {
  const Point2 d = c2 - c1;
  const double len = norm(d);
  if (len < 2.0 - kTol) throw Error("overlap");
  const Point2 n = perp(d / len);
  const double base = dot(c1, n);
  return {HalfPlane(n, base + 1.0), HalfPlane(-n, -base + 1.0)};
}

ConvexPolygon shrink(const ConvexPolygon& polygon, std::span<const Point2> centers,
                     std::size_t disk_index) {
  if (disk_index >= centers.size()) throw Error("disk index out of range");
  constexpr double kTangency = 1e-6;
  const std::vector<HalfPlane> sides = polygon.sides();
  const Point2 chosen = centers[disk_index];
  std::vector<HalfPlane> moved;
  moved.reserve(sides.size());
  for (const HalfPlane& s : sides) {
    const bool tangent = std::any_of(centers.begin(), centers.end(), [&](Point2 c) {
      return std::abs(-s.signed_distance(c) - 1.0) <= kTangency;
    });
    if (!tangent) throw Error("not a tangent polygon");
    if (-s.signed_distance(chosen) < 1.0 - kTangency) throw Error("chosen disk is not inside");
    moved.emplace_back(s.normal, dot(chosen, s.normal) + 1.0);
  }
  std::vector<Point2> verts;
  verts.reserve(moved.size());
  for (std::size_t i = 0; i < moved.size(); ++i)
    verts.push_back(line_intersection(moved[(i + moved.size() - 1) % moved.size()], moved[i]));
  return ConvexPolygon(std::move(verts));
}

double cap_area_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) throw std::invalid_argument("cap angle must lie in (0, pi)");
  return 1.0 / std::tan(0.5 * alpha) - 0.5 * (kPi - alpha);
}

}  // namespace kgon
