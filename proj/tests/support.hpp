#pragma once

// Random instance generators and independent oracles shared by the unit
// tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "kgon/geometry.hpp"
#include "kgon/packing.hpp"

namespace kgon::testing {

// Star-shaped simple polygon with m vertices around the origin.
inline std::vector<Point2> random_star(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles;
  for (int i = 0; i < m; ++i) angles.push_back(2.0 * kPi * (i + 0.1 + 0.8 * unit(rng)) / m);
  std::vector<Point2> out;
  for (double a : angles) out.push_back((0.3 + 1.7 * unit(rng)) * unit_vector(a));
  return out;
}

struct ParallelPair {
  SimplePolygon p;
  SimplePolygon q;
  bool flipped = false;  // some side of q points against its partner in p
};

// Q keeps P's side lines' directions, rescales every side by a random factor
// (sometimes negative) and restores closure by a least-squares correction.
// Returns nullopt when the result is not simple or changes orientation.
inline std::optional<ParallelPair> random_parallel_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<Point2> pv = random_star(rng, count(rng));
  const std::size_t m = pv.size();

  std::vector<Point2> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(pv[(i + 1) % m] - pv[i]);
  std::vector<double> scale;
  bool flipped = false;
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.4 + 1.2 * unit(rng);
    if (unit(rng) < 0.15) s = -s, flipped = true;
    scale.push_back(s);
  }
  // Solve (sum e e^T) lambda = -sum s e, then s_i += lambda . e_i.
  double sxx = 0, sxy = 0, syy = 0;
  Point2 rhs;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += edges[i].x * edges[i].x, sxy += edges[i].x * edges[i].y, syy += edges[i].y * edges[i].y;
    rhs = rhs - scale[i] * edges[i];
  }
  const double det = sxx * syy - sxy * sxy;
  if (std::abs(det) < 1e-9) return std::nullopt;
  const Point2 lambda{(syy * rhs.x - sxy * rhs.y) / det, (sxx * rhs.y - sxy * rhs.x) / det};
  std::vector<Point2> qv{{0.3 * unit(rng), 0.3 * unit(rng)}};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double s = scale[i] + dot(lambda, edges[i]);
    if (std::abs(s) < 0.05) return std::nullopt;
    qv.push_back(qv.back() + s * edges[i]);
  }
  if (std::abs(scale[m - 1] + dot(lambda, edges[m - 1])) < 0.05) return std::nullopt;
  if (!is_simple(qv)) return std::nullopt;
  try {
    SimplePolygon p(pv), q(qv);
    if ((p.signed_area() > 0) != (q.signed_area() > 0)) return std::nullopt;
    return ParallelPair{std::move(p), std::move(q), flipped};
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Random valid packing of n disks: rejection sampling in a box.
inline UnitDiskPacking random_packing(std::mt19937_64& rng, int n) {
  const double half = 1.5 * std::sqrt(static_cast<double>(n)) + 1.0;
  std::uniform_real_distribution<double> coord(-half, half);
  UnitDiskPacking out;
  while (static_cast<int>(out.size()) < n) {
    const Point2 c{coord(rng), coord(rng)};
    if (std::all_of(out.centers.begin(), out.centers.end(), [&](Point2 d) { return distance(c, d) >= 2.0; }))
      out.centers.push_back(c);
  }
  return out;
}

struct TangentInstance {
  ConvexPolygon polygon;
  UnitDiskPacking packing;
};

// Convex polygon whose every side is a supporting tangent of a random
// packing, for random side normals. nullopt when some side is redundant.
inline std::optional<TangentInstance> random_tangent_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> disks(1, 8), sides(3, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  UnitDiskPacking packing = random_packing(rng, disks(rng));
  const int k = sides(rng);
  std::vector<HalfPlane> lines;
  for (int j = 0; j < k; ++j) {
    const Point2 u = unit_vector(2.0 * kPi * (j + 0.8 * unit(rng)) / k);
    double best = -1e300;
    for (Point2 c : packing.centers) best = std::max(best, dot(c, u));
    lines.emplace_back(u, best + 1.0);
  }
  try {
    Region region = halfplane_intersection(lines);
    auto* polygon = std::get_if<ConvexPolygon>(&region);
    if (polygon == nullptr || static_cast<int>(polygon->size()) != k) return std::nullopt;
    return TangentInstance{std::move(*polygon), std::move(packing)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Area of the cap of a unit disk in a corner of internal angle alpha, by
// composite Simpson integration of horizontal cross-sections. The corner sits
// on the y axis at height 1/sin(alpha/2) above the disk centre.
inline double cap_area_quadrature(double alpha, int steps = 200000) {
  const double h = std::tan(alpha / 2.0);
  const double apex = 1.0 / std::sin(alpha / 2.0);
  const double touch = std::sin(alpha / 2.0);  // height of the tangency points
  const auto width = [&](double y) {
    const double wedge = 2.0 * (apex - y) * h;
    const double disk = y < 1.0 ? 2.0 * std::sqrt(std::max(0.0, 1.0 - y * y)) : 0.0;
    return wedge - disk;
  };
  // Split at y = 1 where the disk chord has a square-root singularity.
  const auto simpson = [&](double lo, double hi) {
    const double dy = (hi - lo) / steps;
    double sum = width(lo) + width(hi);
    for (int i = 1; i < steps; ++i) sum += width(lo + i * dy) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * dy / 3.0;
  };
  // Substitute y = 1 - s^2 on [touch, 1] to remove the singularity.
  const double smax = std::sqrt(1.0 - touch);
  const double ds = smax / steps;
  const auto g = [&](double s) { return width(1.0 - s * s) * 2.0 * s; };
  double lower = g(0.0) + g(smax);
  for (int i = 1; i < steps; ++i) lower += g(i * ds) * (i % 2 == 1 ? 4.0 : 2.0);
  lower *= ds / 3.0;
  return lower + simpson(1.0, apex);
}

// Isosceles triangle with base angles beta holding two tangent unit disks,
// each inscribed in one base corner. Returns its area.
inline double isosceles_two_disk_area(double beta) {
  // Each centre sits cot(beta/2) in from its corner at height 1, and the
  // centres are 2 apart, so base = 2 cot(beta/2) + 2.
  const double base = 2.0 / std::tan(beta / 2.0) + 2.0;
  return base * base * std::tan(beta) / 4.0;
}

// Golden-section minimum of isosceles_two_disk_area over beta.
inline double isosceles_two_disk_minimum() {
  double lo = 20.0 * kPi / 180.0, hi = 70.0 * kPi / 180.0;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    if (isosceles_two_disk_area(a) < isosceles_two_disk_area(b))
      hi = b;
    else
      lo = a;
  }
  return isosceles_two_disk_area((lo + hi) / 2.0);
}

}  // namespace kgon::testing
