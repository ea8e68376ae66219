// Acceptance gate: one PASS/FAIL line per criterion, tolerances and time
// budgets pinned below. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kgon/bounds.hpp"
#include "kgon/constructions.hpp"
#include "kgon/optimizer.hpp"
#include "kgon/packing.hpp"
#include "kgon/trisectrix.hpp"
#include "support.hpp"

using namespace kgon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string fmt(const char* format, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Outcome bound_table() {
  Outcome o;
  for (int k = 3; k <= 12; ++k)
    o.require(std::abs(kgon_bound(1, k) - k * std::tan(kPi / k)) <= 1e-12, "kgon_bound(1," + std::to_string(k) + ")");
  o.require(std::abs(kgon_bound(2, 4) - 8.0) <= 1e-12, "kgon_bound(2,4)");
  o.require(std::abs(kgon_bound(3, 4) - (10.0 + std::sqrt(3.0))) <= 1e-12, "kgon_bound(3,4)");
  o.require(std::abs(wegner_bound(3) - (6.0 + std::sqrt(3.0) + kPi)) <= 1e-12, "wegner_bound(3)");
  if (o.ok) o.detail = "kgon_bound(3,4) = " + fmt("%.12f", kgon_bound(3, 4));
  return o;
}

Outcome certification_sweep() {
  std::vector<std::pair<int, int>> cases;
  for (int k : {4, 6, 8, 10, 12}) cases.emplace_back(2, k);
  for (int n : {3, 6})
    for (int k : {3, 6, 9, 12}) cases.emplace_back(n, k);
  for (int n = 1; n <= 20; ++n)
    if (n != 2)
      for (int k : {6, 12}) cases.emplace_back(n, k);
  for (int n : {1, 7, 19}) cases.emplace_back(n, 6);

  Outcome o;
  double worst = 0.0;
  for (auto [n, k] : cases) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    try {
      const ConstructionOutput c = construct(n, k);
      const EqualityReport r = verify_optimal(c.polygon, c.packing, n, k);
      const double err = std::abs(r.area - kgon_bound(n, k));
      worst = std::max(worst, err);
      o.require(r.optimal, tag + " not optimal");
      o.require(err < 1e-9, tag + " area off by " + fmt("%.3e", err));
    } catch (const std::exception& e) {
      o.require(false, tag + " threw: " + e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " cases, max |area - bound| = " + fmt("%.2e", worst);
  return o;
}

Outcome wegner_generator() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 120; ++n) {
    const UnitDiskPacking p = generate_wegner(n);
    const double err = std::abs(hull_metrics(p).hull_area - wegner_bound(n));
    worst = std::max(worst, err);
    o.require(p.size() == static_cast<std::size_t>(n), "n = " + std::to_string(n) + " wrong size");
    o.require(classify(p).tag == PackingTag::Wegner, "n = " + std::to_string(n) + " not Wegner");
    o.require(err <= 1e-9, "n = " + std::to_string(n) + " hull area off");
  }
  if (o.ok) o.detail = "n = 1..120, max |hull - bound| = " + fmt("%.2e", worst);
  return o;
}

Outcome reference_constants() {
  Outcome o;
  const ReferenceAreas a = three_disk_reference_areas();
  const double s3 = std::sqrt(3.0);
  o.require(std::abs(a.hull - (kPi + 6.0 + s3)) <= 1e-9, "hull area " + fmt("%.12f", a.hull));
  o.require(std::abs(a.corner_triangle - (4.0 + 2.0 * s3) / s3) <= 1e-9,
            "corner triangle " + fmt("%.12f", a.corner_triangle));
  o.require(std::abs(a.cut_quadrilateral - (11.0 + 6.0 * s3) / s3) <= 1e-9,
            "cut quadrilateral " + fmt("%.12f", a.cut_quadrilateral));
  o.require(std::abs(a.linear_rectangle - 12.0) <= 1e-9, "rectangle " + fmt("%.12f", a.linear_rectangle));
  o.require((11.0 + 6.0 * s3) / s3 > 12.0 && 12.0 > 10.0 + s3, "strict chain");
  o.require(a.cut_quadrilateral > a.linear_rectangle && a.linear_rectangle > kgon_bound(3, 4), "computed chain");
  if (o.ok) o.detail = fmt("%.9f", a.cut_quadrilateral) + " > 12 > " + fmt("%.9f", kgon_bound(3, 4));
  return o;
}

Outcome optimizer_targets() {
  Outcome o;
  const double oracle = testing::isosceles_two_disk_minimum();
  o.require(std::abs(oracle - (6.0 + 4.0 * std::sqrt(2.0))) <= 1e-9, "isosceles oracle " + fmt("%.12f", oracle));
  struct Target {
    int n, k;
    double area, tol;
  };
  const std::vector<Target> targets = {
      {1, 3, 3.0 * std::sqrt(3.0), 1e-4}, {2, 4, 8.0, 1e-3}, {3, 4, 12.0, 1e-3}, {2, 3, oracle, 1e-3}};
  std::string summary;
  for (const Target& t : targets) {
    const std::string tag = "(" + std::to_string(t.n) + "," + std::to_string(t.k) + ")";
    try {
      const OptimizeResult r = solve(t.n, t.k);
      o.require(r.restarts_used <= 200, tag + " used too many restarts");
      o.require(std::abs(r.area - t.area) <= t.tol, tag + " area " + fmt("%.9f", r.area));
      o.require(evaluate(r.best).violation < 1e-7, tag + " infeasible");
      if (t.n == 3 && t.k == 4) o.require(r.gap >= 0.26, tag + " gap " + fmt("%.6f", r.gap));
      summary += " " + tag + "=" + fmt("%.6f", r.area);
    } catch (const std::exception& e) {
      o.require(false, tag + " threw: " + e.what());
    }
  }
  if (o.ok) o.detail = "areas" + summary;
  return o;
}

Outcome proposition_suites() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int pairs = 0, attempts = 0;
  while (pairs < 1000 && ++attempts < 500000) {
    const auto pair = testing::random_parallel_pair(rng);
    if (!pair) continue;
    const ParallelReport r = parallel_invariants(pair->p, pair->q);
    o.require(r.is_parallel && r.reflex_equal && r.angles_equal_if_convex, "parallel pair " + std::to_string(pairs));
    ++pairs;
  }
  o.require(pairs == 1000, "could not generate 1000 parallel pairs");

  int shrinks = 0;
  double worst = 0.0;
  attempts = 0;
  while (shrinks < 1000 && ++attempts < 500000) {
    const auto inst = testing::random_tangent_polygon(rng);
    if (!inst) continue;
    const ConvexPolygon s = shrink(inst->polygon, inst->packing, static_cast<std::size_t>(shrinks) % inst->packing.size());
    const auto a = inst->polygon.internal_angles(), b = s.internal_angles();
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    ++shrinks;
  }
  o.require(shrinks == 1000, "could not generate 1000 tangent polygons");
  o.require(worst <= 1e-9, "shrink angle drift " + fmt("%.3e", worst));

  const double residual = trisectrix_residuals(1.0, 10000);
  o.require(residual <= 1e-9, "trisectrix residual " + fmt("%.3e", residual));
  if (o.ok)
    o.detail = "1000 pairs, 1000 shrinks (max drift " + fmt("%.1e", worst) + "), trisectrix residual " +
               fmt("%.1e", residual);
  return o;
}

Outcome cap_calculus() {
  Outcome o;
  double worst = 0.0;
  for (int k = 3; k <= 64; ++k) {
    const double err = std::abs(k * cap_area_unit(kPi - 2.0 * kPi / k) - (k * std::tan(kPi / k) - kPi));
    worst = std::max(worst, err);
  }
  o.require(worst <= 1e-12, "cap sum error " + fmt("%.3e", worst));
  const double quad = testing::cap_area_quadrature(kPi / 3.0);
  const double diff = std::abs(quad - cap_area_unit(kPi / 3.0));
  o.require(diff <= 1e-4, "quadrature disagrees by " + fmt("%.3e", diff));
  if (o.ok) o.detail = "cap sums k = 3..64 max error " + fmt("%.1e", worst) + ", quadrature diff " + fmt("%.1e", diff);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "bound table", 1.0, bound_table},
      {2, "construction certification sweep", 30.0, certification_sweep},
      {3, "Wegner generator n <= 120", 120.0, wegner_generator},
      {4, "three-disk reference constants", 1.0, reference_constants},
      {5, "optimizer targets", 300.0, optimizer_targets},
      {6, "parallel / shrink / trisectrix suites", 30.0, proposition_suites},
      {7, "cap calculus", 10.0, cap_calculus},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "over time budget " + fmt("%.0f s", c.budget_seconds);
    }
    std::printf("criterion %d [%s]: %s (%.2f s) %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
