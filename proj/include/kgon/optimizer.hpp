#pragma once

// Multistart derivative-free search for small-area convex k-gons containing
// n unit disks. Desk scale only: n <= 6, k <= 8.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

// Polygon { p : p . u(normals[j]) <= offsets[j] } around disks at `centers`.
struct Candidate {
  std::vector<Point2> centers;
  std::vector<double> normals;  // side normal angles, ascending
  std::vector<double> offsets;

  std::vector<HalfPlane> halfplanes() const;
};

struct Evaluation {
  double area = 0.0;       // +inf when the intersection is unbounded
  double violation = 0.0;  // 0 when feasible
  int effective_sides = 0;
};

Evaluation evaluate(const Candidate& candidate);

// Throws if the candidate is not a bounded polygon.
ConvexPolygon candidate_polygon(const Candidate& candidate);

struct SolveConfig {
  int restarts = 48;
  std::uint64_t seed = 1;
  int max_iters = 2000;  // simplex iterations per penalty stage
  std::vector<double> penalty_schedule = {10.0, 1e3, 1e5};
};

struct OptimizeResult {
  Candidate best;
  double area = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

// Deterministic for fixed (n, k, config). Throws kgon::Error when no restart
// reaches a feasible candidate.
OptimizeResult solve(int n, int k, const SolveConfig& config = {});

// Text report: '#' header lines, the centres as "x y" lines, then one
// "side phi d" line per half-plane.
void write_result(std::ostream& out, int n, int k, const OptimizeResult& result);

}  // namespace kgon
