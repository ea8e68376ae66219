#include <doctest.h>

#include <cmath>
#include <random>

#include "kgon/bounds.hpp"
#include "kgon/packing.hpp"
#include "support.hpp"

using namespace kgon;
using doctest::Approx;

TEST_CASE("validate") {
  CHECK(is_valid(UnitDiskPacking{{{0, 0}, {2, 0}}}));
  const auto bad = validate(UnitDiskPacking{{{0, 0}, {1.9, 0}}});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].first == 0);
  CHECK(bad[0].second == 1);
  CHECK(is_valid(generate_special(SpecialKind::Triangular, 2)));
}

TEST_CASE("hull metrics") {
  CHECK(hull_metrics(UnitDiskPacking{{{5, 5}}}).hull_area == Approx(kPi));
  const HullMetrics two = hull_metrics(UnitDiskPacking{{{0, 0}, {2, 0}}});
  CHECK(two.hull_area == Approx(4.0 + kPi).epsilon(1e-12));
  CHECK(two.center_hull_perimeter == Approx(4.0));
  const HullMetrics three = hull_metrics(generate_special(SpecialKind::Triangular, 2));
  CHECK(three.hull_area == Approx(6.0 + kSqrt3 + kPi).epsilon(1e-12));
  CHECK_THROWS_AS(hull_metrics(UnitDiskPacking{}), Error);
}

TEST_CASE("hull metric identities on random packings" * doctest::description("randomized")) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    const UnitDiskPacking p = testing::random_packing(rng, size(rng));
    const HullMetrics m = hull_metrics(p);
    CHECK(std::abs(m.hull_area - (m.center_hull_area + m.center_hull_perimeter + kPi)) <= 1e-9);
    CHECK(std::abs(m.hull_perimeter - (m.center_hull_perimeter + 2.0 * kPi)) <= 1e-9);
    CHECK(m.hull_area >= wegner_bound(static_cast<int>(p.size())) - 1e-9);
  }
}

TEST_CASE("tangent polygon") {
  CHECK_THROWS_AS(tangent_polygon(UnitDiskPacking{{{0, 0}}}), Error);
  CHECK(std::get<Strip>(tangent_polygon(UnitDiskPacking{{{0, 0}, {2, 0}}})).width == Approx(2.0));

  const ConvexPolygon tri = std::get<ConvexPolygon>(tangent_polygon(generate_special(SpecialKind::Triangular, 2)));
  CHECK(tri.size() == 3);
  CHECK(tri.area() == Approx(6.0 + 4.0 * kSqrt3).epsilon(1e-12));

  const ConvexPolygon hex =
      std::get<ConvexPolygon>(tangent_polygon(generate_special(SpecialKind::CenteredHexagonal, 2)));
  CHECK(hex.size() == 6);
  CHECK(hex.area() == Approx(12.0 + 8.0 * kSqrt3).epsilon(1e-12));
  for (std::size_t i = 0; i < 6; ++i) CHECK(hex.side_length(i) == Approx(2.0 + 2.0 / kSqrt3).epsilon(1e-12));
}

TEST_CASE("tangent polygon contains every disk" * doctest::description("randomized")) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(2, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const UnitDiskPacking p = testing::random_packing(rng, size(rng));
    const Region r = tangent_polygon(p);
    std::vector<HalfPlane> lines;
    if (const auto* poly = std::get_if<ConvexPolygon>(&r)) lines = poly->sides();
    if (const auto* s = std::get_if<Strip>(&r)) lines = {s->first, s->second};
    for (const HalfPlane& h : lines)
      for (Point2 c : p.centers) CHECK(-h.signed_distance(c) >= 1.0 - 1e-9);
  }
}

TEST_CASE("classify") {
  const PackingClass two = classify(UnitDiskPacking{{{0, 0}, {2, 0}}});
  CHECK(two.tag == PackingTag::Wegner);
  CHECK(two.required_perimeter == 4.0);

  const PackingClass three = classify(generate_special(SpecialKind::Triangular, 2));
  CHECK(three.tag == PackingTag::Wegner);
  CHECK(three.hull_perimeter == Approx(6.0));

  const PackingClass ten = classify(generate_special(SpecialKind::Triangular, 4));
  CHECK(ten.tag == PackingTag::Groemer);
  CHECK(ten.hull_perimeter == Approx(18.0));
  CHECK(ten.required_perimeter == 16.0);

  CHECK(classify(UnitDiskPacking{{{0, 0}, {2, 0}, {5, 0}}}).tag == PackingTag::NotGroemer);
  CHECK(classify(UnitDiskPacking{{{0, 0}, {1, 0}}}).tag == PackingTag::NotGroemer);
  // Hole inside the hull.
  UnitDiskPacking holed = generate_special(SpecialKind::CenteredHexagonal, 2);
  holed.centers.erase(holed.centers.begin() + 3);
  CHECK(classify(holed).tag == PackingTag::NotGroemer);
  // Off-lattice point.
  CHECK(classify(UnitDiskPacking{{{0, 0}, {2, 0}, {1, 2}}}).tag == PackingTag::NotGroemer);
  // Rotated and shifted lattice packings are still recognized.
  UnitDiskPacking turned = generate_special(SpecialKind::CenteredHexagonal, 3);
  for (Point2& c : turned.centers) c = rotated(c, 0.7) + Point2{3.3, -1.2};
  CHECK(classify(turned).tag == PackingTag::Wegner);
}

TEST_CASE("wegner generator") {
  CHECK(generate_wegner(2).centers.size() == 2);
  const UnitDiskPacking seven = generate_wegner(7);
  const ConvexPolygon hull = std::get<ConvexPolygon>(convex_hull(seven.centers));
  CHECK(hull.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(hull.side_length(i) == Approx(2.0));
  CHECK(classify(generate_wegner(10)).hull_perimeter == Approx(16.0));
  CHECK_THROWS_WITH_AS(generate_wegner(121), "exceptionality not decided by this artifact", Error);
  CHECK_THROWS_AS(generate_wegner(0), std::invalid_argument);

  for (int n = 1; n <= 120; ++n) {
    const UnitDiskPacking p = generate_wegner(n);
    REQUIRE(p.size() == static_cast<std::size_t>(n));
    CHECK(classify(p).tag == PackingTag::Wegner);
    CHECK(std::abs(hull_metrics(p).hull_area - wegner_bound(n)) <= 1e-9);
  }
}

TEST_CASE("special packings") {
  CHECK(generate_special(SpecialKind::CenteredHexagonal, 1).size() == 1);
  CHECK(generate_special(SpecialKind::CenteredHexagonal, 4).size() == 37);
  const UnitDiskPacking six = generate_special(SpecialKind::Triangular, 3);
  CHECK(six.size() == 6);
  const ConvexPolygon hull = std::get<ConvexPolygon>(convex_hull(six.centers));
  CHECK(hull.size() == 3);
  CHECK(hull.side_length(0) == Approx(4.0));
  const UnitDiskPacking row = generate_special(SpecialKind::Linear, 3);
  CHECK(row.centers[2].x == 4.0);
  CHECK(row.centers[2].y == 0.0);
  CHECK_THROWS_AS(generate_special(SpecialKind::Linear, 0), std::invalid_argument);
}
