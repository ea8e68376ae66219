#pragma once

// Closed-form area bounds for convex hulls and convex k-gons containing n
// non-overlapping unit disks, and the tightness classification of (n, k).

#include <string_view>

namespace kgon {

// Smallest integer z with z >= sqrt(12n - 3) - 3, computed in integers.
int ceil_term(int n);

// Minimum area of the convex hull of n unit disks.
double wegner_bound(int n);

// Minimum area of a convex k-gon containing n unit disks.
double kgon_bound(int n, int k);

enum class Tightness {
  TightSingle,        // n = 1: the unit k-gon
  TightA,             // n = 2, even k >= 4
  TightB,             // n in {3, 6}, k a multiple of 3
  TightC,             // non-exceptional n != 2, k a multiple of 6
  TightCenteredHex,   // n = 3m(m-1)+1, k = 6
  NotTightKnown,      // (3, 4) and (2, odd k)
  Unknown,
};

std::string_view to_string(Tightness t);

Tightness tightness(int n, int k);

bool is_centered_hexagonal(int n);

struct BoundReport {
  int n = 0;
  int k = 0;
  int ceil_term = 0;
  double wegner_bound = 0.0;
  double kgon_bound = 0.0;
  Tightness tightness = Tightness::Unknown;
};

BoundReport bound_report(int n, int k);

}  // namespace kgon
