#pragma once

// Unit-disk packings: validity, hull metrics, tangent polygons, the
// Groemer / Wegner classification and generators for lattice packings.

#include <cstddef>
#include <string_view>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

struct UnitDiskPacking {
  std::vector<Point2> centers;

  std::size_t size() const { return centers.size(); }
};

struct OverlapViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  double distance = 0.0;
};

// Every pair of centers closer than 2 - kTol. Empty means the packing is valid.
std::vector<OverlapViolation> validate(const UnitDiskPacking& packing);
inline bool is_valid(const UnitDiskPacking& packing) { return validate(packing).empty(); }

struct HullMetrics {
  double hull_area = 0.0;  // convex hull of the disks themselves
  double hull_perimeter = 0.0;
  double center_hull_area = 0.0;
  double center_hull_perimeter = 0.0;  // a segment hull counts twice its length
};

HullMetrics hull_metrics(const UnitDiskPacking& packing);

// Intersection of the inner half-planes of all joint tangents.
Region tangent_polygon(const UnitDiskPacking& packing);

enum class PackingTag { NotGroemer, Groemer, Wegner };

std::string_view to_string(PackingTag tag);

struct PackingClass {
  PackingTag tag = PackingTag::NotGroemer;
  double hull_perimeter = 0.0;  // of the center hull
  double required_perimeter = 0.0;
};

PackingClass classify(const UnitDiskPacking& packing);

// A Wegner packing of n disks, 1 <= n <= 120. Deterministic.
UnitDiskPacking generate_wegner(int n);

enum class SpecialKind { CenteredHexagonal, Triangular, Linear };

// CenteredHexagonal(m): 3m(m-1)+1 disks with a regular hexagonal center hull.
// Triangular(m): m(m+1)/2 disks filling a lattice triangle of side 2(m-1).
// Linear(n): n collinear disks spaced 2 apart.
UnitDiskPacking generate_special(SpecialKind kind, int size);

inline ConvexPolygon shrink(const ConvexPolygon& polygon, const UnitDiskPacking& packing,
                            std::size_t disk_index) {
  return shrink(polygon, packing.centers, disk_index);
}

}  // namespace kgon
