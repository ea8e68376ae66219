#include "kgon/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "kgon/bounds.hpp"
#include "kgon/constructions.hpp"
#include "kgon/optimizer.hpp"
#include "kgon/packing.hpp"
#include "kgon/svg.hpp"
#include "kgon/text_io.hpp"
#include "kgon/trisectrix.hpp"

namespace kgon::cli {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

Scene packing_scene(const ConvexPolygon& polygon, const UnitDiskPacking& packing) {
  Scene scene;
  scene.add(polygon);
  for (const Point2& c : packing.centers) scene.disks.push_back({c});
  return scene;
}

void print_report(std::ostream& out, const EqualityReport& r) {
  out << "area = " << fmt("%.12f", r.area) << " optimal = " << yes_no(r.optimal) << '\n'
      << "kgon_bound = " << fmt("%.12f", r.bound) << '\n'
      << "each_side_tangent = " << yes_no(r.each_side_tangent) << '\n'
      << "wegner_packed = " << yes_no(r.wegner_packed) << '\n'
      << "caps_unit_disk = " << yes_no(r.caps_unit_disk) << '\n'
      << "equiangular = " << yes_no(r.equiangular) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-area convex k-gons around unit disks", "kgon"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string output;

  auto* bound = app.add_subcommand("bound", "area bounds and tightness of (n, k)");
  bound->add_option("n", n)->required()->check(CLI::PositiveNumber);
  bound->add_option("k", k)->required()->check(CLI::Range(3, 1 << 20));

  auto* construct_cmd = app.add_subcommand("construct", "build and certify an optimal k-gon");
  construct_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("k", k)->required()->check(CLI::Range(3, 1 << 20));
  construct_cmd->add_option("-o,--output", output, "SVG figure");

  std::string packing_file;
  auto* classify_cmd = app.add_subcommand("classify", "classify a packing file");
  classify_cmd->add_option("file", packing_file)->required();

  SolveConfig config;
  auto* optimize = app.add_subcommand("optimize", "numerical search for a small k-gon");
  optimize->add_option("n", n)->required()->check(CLI::Range(1, 6));
  optimize->add_option("k", k)->required()->check(CLI::Range(3, 8));
  optimize->add_option("--restarts", config.restarts)->check(CLI::Range(1, 100000));
  optimize->add_option("--seed", config.seed);
  optimize->add_option("-o,--output", output, "result file; .svg renders a figure");

  double a = 1.0;
  int samples = 500;
  auto* trisectrix = app.add_subcommand("trisectrix", "sample the reflection construction");
  trisectrix->add_option("a", a)->required()->check(CLI::PositiveNumber);
  trisectrix->add_option("--samples", samples)->check(CLI::Range(1, 10000000));
  trisectrix->add_option("-o,--output", output, ".svg renders the curve, otherwise samples");

  std::string polygon_file;
  auto* verify = app.add_subcommand("verify", "check the equality conditions for given files");
  verify->add_option("polygon", polygon_file)->required();
  verify->add_option("packing", packing_file)->required();
  verify->add_option("n", n)->required()->check(CLI::PositiveNumber);
  verify->add_option("k", k)->required()->check(CLI::Range(3, 1 << 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bound) {
      const BoundReport r = bound_report(n, k);
      out << "ceil_term = " << r.ceil_term << '\n'
          << "wegner_bound = " << fmt("%.12f", r.wegner_bound) << '\n'
          << "kgon_bound = " << fmt("%.12f", r.kgon_bound) << '\n'
          << "tightness = " << to_string(r.tightness) << '\n';
    } else if (*construct_cmd) {
      const ConstructionOutput c = construct(n, k);
      print_report(out, verify_optimal(c.polygon, c.packing, n, k));
      if (!output.empty()) render_svg(packing_scene(c.polygon, c.packing), output);
    } else if (*classify_cmd) {
      const PackingClass c = classify(read_packing(packing_file));
      out << to_string(c.tag) << " (perimeter " << fmt("%.6f", c.hull_perimeter) << ", required "
          << fmt("%.0f", c.required_perimeter) << ")\n";
    } else if (*optimize) {
      const OptimizeResult r = solve(n, k, config);
      write_result(out, n, k, r);
      if (ends_with(output, ".svg")) {
        render_svg(packing_scene(candidate_polygon(r.best), UnitDiskPacking{r.best.centers}), output);
      } else if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw Error("cannot write " + output);
        write_result(file, n, k, r);
      }
    } else if (*trisectrix) {
      const std::vector<TrisectrixSample> s = trisectrix_samples(a, samples);
      if (ends_with(output, ".svg")) {
        Scene scene;
        Scene::Curve curve;
        for (const TrisectrixSample& p : s) curve.points.push_back(p.x_reflected);
        scene.curves.push_back(std::move(curve));
        render_svg(scene, output);
      } else if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw Error("cannot write " + output);
        write_trisectrix_samples(file, s);
      } else {
        write_trisectrix_samples(out, s);
      }
      out << "max_residual = " << fmt("%.3e", trisectrix_residuals(a, samples)) << '\n';
    } else if (*verify) {
      const ConvexPolygon polygon = read_polygon(polygon_file);
      const UnitDiskPacking packing = read_packing(packing_file);
      print_report(out, verify_optimal(polygon, packing, n, k));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace kgon::cli
