#pragma once

// Explicit optimal polygons for the tight (n, k) cases, the equality-case
// certificate, and the three-disk reference configuration.

#include "kgon/geometry.hpp"
#include "kgon/packing.hpp"

namespace kgon {

struct EqualityReport {
  bool each_side_tangent = false;
  bool wegner_packed = false;
  bool caps_unit_disk = false;  // consecutive sides share a tangent disk
  bool equiangular = false;
  double area = 0.0;
  double bound = 0.0;
  bool optimal = false;
};

struct ConstructionOutput {
  ConvexPolygon polygon;
  UnitDiskPacking packing;
  EqualityReport report;
};

// Regular k-gon with apothem 1 around `center`. Side normals sit at
// first_normal + 2*pi*j/k; the default puts one side at the bottom.
ConvexPolygon unit_kgon(int k, Point2 center = {}, double first_normal = -kPi / 2.0);

// Checks the equality conditions of the k-gon bound for `polygon` around
// `packing`. Throws if a disk is not contained.
EqualityReport verify_optimal(const ConvexPolygon& polygon, const UnitDiskPacking& packing,
                              int n, int k);

// Replaces every corner cap of an equiangular polygon by the matching
// 1/m'th of a unit (m * factor)-gon around the disk tangent to both sides.
ConvexPolygon refine_caps(const ConvexPolygon& base, const UnitDiskPacking& packing, int factor);

// Two tangent disks: a 2x2 rectangle between the centres with half unit
// polygons glued on both ends. Odd k mixes a half 2k'-gon and a half
// 2(k'+1)-gon; that polygon does not attain the bound.
ConstructionOutput construct_two_disks(int k);

// n in {3, 6}, k = 3k'.
ConstructionOutput construct_triangle_family(int n, int k);

// n <= 120, n != 2, k = 6k'.
ConstructionOutput construct_hexagon_family(int n, int k);

// Picks the construction for (n, k); throws when no tight construction exists.
ConstructionOutput construct(int n, int k);

// Three tangent disks inside their tangent triangle ABC, with each corner cut
// by the disk tangent perpendicular to the corner bisector (vertex side).
struct ReferenceAreas {
  double hull = 0.0;               // convex hull of the three disks
  double cut_quadrilateral = 0.0;  // A'BCA''
  double corner_triangle = 0.0;    // B'QC''
  double linear_rectangle = 0.0;   // 2 x 6 rectangle around three collinear disks
};

ReferenceAreas three_disk_reference_areas();

}  // namespace kgon
