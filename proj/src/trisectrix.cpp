#include "kgon/trisectrix.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace kgon {

namespace {

constexpr double kSampleMargin = 1e-3;

bool admissible(double phi) {
  return (phi >= 0.0 && phi < kPi / 2.0) || (phi > 1.5 * kPi && phi <= 2.0 * kPi);
}

}  // namespace

TrisectrixSample trisectrix_point(double a, double phi) {
  if (!(a > 0.0)) throw std::invalid_argument("trisectrix radius must be positive");
  if (!admissible(phi)) throw std::invalid_argument("azimuth outside [0, pi/2) U (3pi/2, 2pi]");

  const Point2 tangency{a, 0.0};
  TrisectrixSample s;
  s.phi = phi;
  s.x = {a, a * std::tan(phi)};

  // Tangency points of the two tangents from X sit at +-beta around OX.
  const double dist = norm(s.x);
  const double tangent_length = std::abs(s.x.y);  // |XT|
  const double beta = std::atan2(tangent_length, a);
  const Point2 toward = s.x / dist;
  const Point2 r1 = a * rotated(toward, beta);
  const Point2 r2 = a * rotated(toward, -beta);
  const Point2 second = distance(r1, tangency) >= distance(r2, tangency) ? r1 : r2;

  s.x_reflected = 2.0 * second - s.x;
  s.r = norm(s.x_reflected);
  s.theta = std::atan2(s.x_reflected.y, s.x_reflected.x);
  if (s.theta < 0.0) s.theta += 2.0 * kPi;
  return s;
}

std::vector<TrisectrixSample> trisectrix_samples(double a, int count) {
  if (count < 1) throw std::invalid_argument("sample count must be at least 1");
  std::vector<TrisectrixSample> out;
  out.reserve(static_cast<std::size_t>(count));
  const double top = kPi / 2.0 - kSampleMargin;
  for (int i = 0; i < count; ++i) {
    const double phi = count == 1 ? 0.0 : top * i / (count - 1);
    out.push_back(trisectrix_point(a, phi));
  }
  return out;
}

double trisectrix_residuals(double a, int count) {
  double worst = 0.0;
  for (const TrisectrixSample& s : trisectrix_samples(a, count))
    worst = std::max(worst, std::abs(s.r - a / std::cos(s.theta / 3.0)));
  return worst;
}

void write_trisectrix_samples(std::ostream& out, std::span<const TrisectrixSample> samples) {
  char line[160];
  for (const TrisectrixSample& s : samples) {
    std::snprintf(line, sizeof line, "%.12f %.12f %.12f %.12f %.12f\n", s.phi, s.r, s.theta,
                  s.x_reflected.x, s.x_reflected.y);
    out << line;
  }
}

}  // namespace kgon
