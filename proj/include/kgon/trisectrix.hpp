#pragma once

// Maclaurin trisectrix generated by reflecting a point of a tangent line
// across the second tangency point.
//
// Frame: circle of radius a centred at the pole O = (0, 0), tangent line l at
// T = (a, 0), polar axis along the ray from O through T. A point X of l has
// azimuth phi; the second tangent from X touches the circle at R and X' is the
// mirror image of X in R.

#include <iosfwd>
#include <span>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

struct TrisectrixSample {
  double phi = 0.0;
  Point2 x;
  Point2 x_reflected;
  double r = 0.0;
  double theta = 0.0;  // in [0, 2pi)
};

// phi must lie in [0, pi/2) or (3pi/2, 2pi].
TrisectrixSample trisectrix_point(double a, double phi);

// `count` samples with phi uniform on [0, pi/2 - 1e-3].
std::vector<TrisectrixSample> trisectrix_samples(double a, int count);

// Largest |r - a sec(theta/3)| over the samples, r and theta taken from the
// reflection construction.
double trisectrix_residuals(double a, int count);

// One "phi r theta x y" line per sample.
void write_trisectrix_samples(std::ostream& out, std::span<const TrisectrixSample> samples);

}  // namespace kgon
