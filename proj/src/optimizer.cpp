#include "kgon/optimizer.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "kgon/bounds.hpp"
#include "kgon/constructions.hpp"
#include "kgon/packing.hpp"
#include "kgon/text_io.hpp"

namespace kgon {

std::vector<HalfPlane> Candidate::halfplanes() const {
  if (normals.size() != offsets.size()) throw std::invalid_argument("normals and offsets differ in length");
  std::vector<HalfPlane> out;
  out.reserve(normals.size());
  for (std::size_t j = 0; j < normals.size(); ++j) out.push_back(HalfPlane::from_angle(normals[j], offsets[j]));
  return out;
}

Evaluation evaluate(const Candidate& c) {
  const std::size_t k = c.normals.size();
  if (k < 3) throw std::invalid_argument("candidate needs at least 3 sides");
  if (c.centers.empty()) throw std::invalid_argument("candidate needs at least one disk");
  const std::vector<HalfPlane> lines = c.halfplanes();

  Evaluation e;
  double worst = 0.0;
  for (std::size_t i = 0; i < c.centers.size(); ++i) {
    for (std::size_t j = i + 1; j < c.centers.size(); ++j)
      worst = std::max(worst, 2.0 - distance(c.centers[i], c.centers[j]));
    for (const HalfPlane& h : lines) worst = std::max(worst, h.signed_distance(c.centers[i]) + 1.0);
  }

  const ClipResult clip = clip_halfplanes(lines);
  std::set<int> effective;
  if (!clip.empty) {
    const std::size_t m = clip.vertices.size();
    for (std::size_t i = 0; i < m; ++i)
      if (clip.side_ids[i] >= 0 && distance(clip.vertices[i], clip.vertices[(i + 1) % m]) > kTol)
        effective.insert(clip.side_ids[i]);
  }
  e.effective_sides = static_cast<int>(effective.size());
  if (clip.empty)
    e.area = 0.0;
  else if (!clip.bounded)
    e.area = std::numeric_limits<double>::infinity();
  else
    e.area = polygon_area(clip.vertices);
  e.violation = worst + static_cast<double>(k - effective.size());
  if (!clip.empty && !clip.bounded) e.violation += 1.0;
  return e;
}

ConvexPolygon candidate_polygon(const Candidate& candidate) {
  Region region = halfplane_intersection(candidate.halfplanes());
  if (auto* polygon = std::get_if<ConvexPolygon>(&region)) return std::move(*polygon);
  throw Error("candidate polygon is unbounded");
}

namespace {

constexpr double kFeasible = 1e-7;
constexpr double kHuge = 1e12;

// Search vector: n centres then k free normal angles. Offsets are always the
// tightest ones containing every disk.
struct Layout {
  int n = 0;
  int k = 0;
  std::size_t dim() const { return static_cast<std::size_t>(2 * n + k); }
};

Candidate decode(const Layout& layout, std::span<const double> x) {
  Candidate c;
  for (int i = 0; i < layout.n; ++i) c.centers.push_back({x[2 * i], x[2 * i + 1]});
  for (int j = 0; j < layout.k; ++j) {
    double a = std::fmod(x[static_cast<std::size_t>(2 * layout.n + j)], 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    c.normals.push_back(a);
  }
  std::sort(c.normals.begin(), c.normals.end());
  for (double a : c.normals) {
    const Point2 u = unit_vector(a);
    double best = -std::numeric_limits<double>::infinity();
    for (const Point2& p : c.centers) best = std::max(best, dot(p, u));
    c.offsets.push_back(best + 1.0);
  }
  return c;
}

std::vector<double> encode(const Candidate& c) {
  std::vector<double> x;
  for (const Point2& p : c.centers) x.insert(x.end(), {p.x, p.y});
  x.insert(x.end(), c.normals.begin(), c.normals.end());
  return x;
}

// Scales the centres about their centroid until no pair is closer than 2.
void separate(std::vector<Point2>& centers) {
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      closest = std::min(closest, distance(centers[i], centers[j]));
  if (!(closest < 2.0)) return;
  if (!(closest > 0.0)) return;
  Point2 mid;
  for (const Point2& p : centers) mid = mid + p;
  mid = mid / static_cast<double>(centers.size());
  const double factor = 2.0 / closest * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
  for (Point2& p : centers) p = mid + factor * (p - mid);
}

Candidate decode_feasible(const Layout& layout, std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  std::vector<Point2> centers;
  for (int i = 0; i < layout.n; ++i) centers.push_back({y[2 * i], y[2 * i + 1]});
  separate(centers);
  for (int i = 0; i < layout.n; ++i) {
    y[2 * i] = centers[static_cast<std::size_t>(i)].x;
    y[2 * i + 1] = centers[static_cast<std::size_t>(i)].y;
  }
  return decode(layout, y);
}

double capped(double v) { return std::isfinite(v) ? std::min(v, kHuge) : kHuge; }

using Objective = std::function<double(std::span<const double>)>;

struct SimplexDeleter {
  void operator()(gsl_multimin_fminimizer* s) const { gsl_multimin_fminimizer_free(s); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
using SimplexPtr = std::unique_ptr<gsl_multimin_fminimizer, SimplexDeleter>;
using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  return f(std::span<const double>(v->data, v->size));
}

VectorPtr to_gsl(std::span<const double> values) {
  VectorPtr v(gsl_vector_alloc(values.size()));
  std::copy(values.begin(), values.end(), v->data);
  return v;
}

// Nelder-Mead with simplex re-expansion after collapse. Returns the best point.
std::vector<double> minimize_simplex(const Objective& f, std::vector<double> x,
                                     std::span<const double> steps, int max_iters) {
  const std::size_t dim = x.size();
  gsl_multimin_function fn{&trampoline, dim, const_cast<Objective*>(&f)};
  SimplexPtr state(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));
  double scale = 1.0;
  int iter = 0;
  for (int round = 0; round < 4 && iter < max_iters; ++round, scale *= 0.1) {
    VectorPtr start = to_gsl(x);
    std::vector<double> scaled(steps.begin(), steps.end());
    for (double& s : scaled) s *= scale;
    VectorPtr step = to_gsl(scaled);
    gsl_multimin_fminimizer_set(state.get(), &fn, start.get(), step.get());
    while (iter < max_iters) {
      ++iter;
      if (gsl_multimin_fminimizer_iterate(state.get()) != GSL_SUCCESS) break;
      if (gsl_multimin_fminimizer_size(state.get()) < 1e-11) break;
    }
    const gsl_vector* best = gsl_multimin_fminimizer_x(state.get());
    x.assign(best->data, best->data + dim);
  }
  return x;
}

// Cluster of n lattice points grown from the origin, one random neighbour at
// a time.
std::vector<Point2> random_cluster(int n, std::mt19937_64& rng) {
  std::vector<std::pair<long, long>> cells = {{0, 0}};
  std::set<std::pair<long, long>> taken(cells.begin(), cells.end());
  static constexpr long kNeighbours[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  while (static_cast<int>(cells.size()) < n) {
    const auto& base = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
    const auto& step = kNeighbours[std::uniform_int_distribution<int>(0, 5)(rng)];
    const std::pair<long, long> next{base.first + step[0], base.second + step[1]};
    if (taken.insert(next).second) cells.push_back(next);
  }
  std::vector<Point2> out;
  for (const auto& [s, t] : cells)
    out.push_back({2.0 * static_cast<double>(s) + static_cast<double>(t), kSqrt3 * static_cast<double>(t)});
  return out;
}

std::vector<double> even_normals(int k, double rotation) {
  std::vector<double> out;
  for (int j = 0; j < k; ++j) out.push_back(rotation + 2.0 * kPi * j / k);
  return out;
}

std::vector<Candidate> known_seeds(int n, int k) {
  std::vector<Candidate> seeds;
  try {
    const ConstructionOutput built = construct(n, k);
    Candidate c;
    c.centers = built.packing.centers;
    for (const HalfPlane& h : built.polygon.sides()) c.normals.push_back(h.angle());
    seeds.push_back(std::move(c));
  } catch (const std::exception&) {
    // no construction for this (n, k)
  }
  seeds.push_back({generate_special(SpecialKind::Linear, n).centers, even_normals(k, -kPi / 2.0), {}});
  seeds.push_back({generate_wegner(n).centers, even_normals(k, -kPi / 2.0), {}});
  return seeds;
}

struct RestartOutcome {
  bool feasible = false;
  double area = std::numeric_limits<double>::infinity();
  double violation = std::numeric_limits<double>::infinity();
  Candidate best;
};

RestartOutcome run_restart(const Layout& layout, const std::vector<Candidate>& seeds, int restart,
                           const SolveConfig& config) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> jitter(0.0, 1.0);
  std::uniform_real_distribution<double> turn(0.0, 2.0 * kPi);

  Candidate start;
  if (restart % 2 == 0) {
    start = seeds[static_cast<std::size_t>(restart / 2) % seeds.size()];
    const double amount = restart < 2 * static_cast<int>(seeds.size()) ? 0.0 : 0.05;
    for (Point2& p : start.centers) p = p + amount * Point2{jitter(rng), jitter(rng)};
    for (double& a : start.normals) a += amount * jitter(rng);
  } else {
    start.centers = random_cluster(layout.n, rng);
    for (Point2& p : start.centers) p = 1.05 * p + 0.1 * Point2{jitter(rng), jitter(rng)};
    start.normals = even_normals(layout.k, turn(rng));
    for (double& a : start.normals) a += 0.1 * jitter(rng);
  }

  std::vector<double> x = encode(start);
  std::vector<double> steps(layout.dim(), 0.3);
  for (std::size_t j = static_cast<std::size_t>(2 * layout.n); j < steps.size(); ++j) steps[j] = 0.15;

  for (double mu : config.penalty_schedule) {
    const Objective penalized = [&](std::span<const double> v) {
      const Evaluation e = evaluate(decode(layout, v));
      return capped(e.area + mu * e.violation * e.violation);
    };
    x = minimize_simplex(penalized, x, steps, config.max_iters);
  }
  // Polish on the feasible-by-construction map.
  const Objective repaired = [&](std::span<const double> v) {
    const Evaluation e = evaluate(decode_feasible(layout, v));
    return capped(e.area + 1e3 * e.violation);
  };
  x = minimize_simplex(repaired, x, steps, config.max_iters);

  RestartOutcome out;
  out.best = decode_feasible(layout, x);
  const Evaluation e = evaluate(out.best);
  out.area = e.area;
  out.violation = e.violation;
  out.feasible = e.violation < kFeasible && std::isfinite(e.area);
  return out;
}

}  // namespace

OptimizeResult solve(int n, int k, const SolveConfig& config) {
  if (n < 1 || n > 6) throw std::invalid_argument("optimizer supports 1 <= n <= 6");
  if (k < 3 || k > 8) throw std::invalid_argument("optimizer supports 3 <= k <= 8");
  if (config.restarts < 1) throw std::invalid_argument("restarts must be positive");
  if (config.max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  if (config.penalty_schedule.empty()) throw std::invalid_argument("penalty schedule is empty");
  gsl_set_error_handler_off();

  const Layout layout{n, k};
  const std::vector<Candidate> seeds = known_seeds(n, k);

  // Restarts are independent; the reduction keeps the first minimum.
  std::optional<RestartOutcome> best;
  double least_violation = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    RestartOutcome outcome = run_restart(layout, seeds, r, config);
    least_violation = std::min(least_violation, outcome.violation);
    if (outcome.feasible && (!best || outcome.area < best->area)) best = std::move(outcome);
  }
  if (!best)
    throw Error("no feasible candidate after " + std::to_string(config.restarts) +
                " restarts (least violation " + std::to_string(least_violation) + ")");

  OptimizeResult result;
  result.best = std::move(best->best);
  result.area = best->area;
  result.bound = kgon_bound(n, k);
  result.gap = result.area - result.bound;
  result.restarts_used = config.restarts;
  result.seed = config.seed;
  if (result.area < result.bound - 1e-6) throw Error("optimizer beat the lower bound: geometry defect");
  return result;
}

void write_result(std::ostream& out, int n, int k, const OptimizeResult& result) {
  char line[200];
  std::snprintf(line, sizeof line,
                "# n = %d k = %d\n# area = %.12f\n# bound = %.12f\n# gap = %.12f\n"
                "# seed = %llu restarts = %d\n",
                n, k, result.area, result.bound, result.gap,
                static_cast<unsigned long long>(result.seed), result.restarts_used);
  out << line;
  write_points(out, result.best.centers);
  for (std::size_t j = 0; j < result.best.normals.size(); ++j) {
    std::snprintf(line, sizeof line, "side %.12f %.12f\n", result.best.normals[j], result.best.offsets[j]);
    out << line;
  }
}

}  // namespace kgon
