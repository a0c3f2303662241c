#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "thrackle/construct.hpp"
#include "thrackle/verify.hpp"

using namespace thrackle;

namespace {

VerificationReport verify_planar_drawing(const PlanarDrawing& d) {
  return verify_thrackle(document_of(d));
}

// Caterpillar with three hubs carrying 4, 2, and 3 leaves.
Graph hub_caterpillar_12() {
  Graph g;
  g.n = 12;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6},
             {5, 7}, {5, 8}, {8, 9}, {8, 10}, {8, 11}};
  return g;
}

double min_crossing_clearance(const SphericalDrawing& d) {
  double best = 1e9;
  for (size_t e = 0; e < d.arcs.size(); ++e)
    for (size_t f = e + 1; f < d.arcs.size(); ++f) {
      if (shared_endpoint(d.graph, static_cast<int>(e), static_cast<int>(f))) continue;
      for (const auto& m : arc_arc_meetings(d.arcs[e], d.arcs[f])) {
        for (const auto* arc : {&d.arcs[e], &d.arcs[f]}) {
          const double t = arc_angle_of(*arc, m.point);
          best = std::min(best, std::min(t, arc->length - t));
        }
      }
    }
  return best;
}

}  // namespace

TEST_CASE("star polygon cycles verify as thrackles") {
  for (const int n : {3, 5, 7, 9, 11}) {
    CAPTURE(n);
    const auto d = construct_star_polygon_cycle(n);
    CHECK(d.graph.n == n);
    for (const auto& p : d.positions) CHECK(norm(p) == doctest::Approx(1.0));
    const auto report = verify_planar_drawing(d);
    CHECK(report.is_thrackle);
    CHECK(report.is_general_position);
  }
}

TEST_CASE("pentagram star has ten single meetings") {
  const auto report = verify_planar_drawing(construct_star_polygon_cycle(5));
  REQUIRE(report.pairs.size() == 10);
  for (const auto& rec : report.pairs) CHECK(rec.kinds.size() == 1);
}

TEST_CASE("even or tiny cycles are rejected") {
  CHECK_THROWS_AS(construct_star_polygon_cycle(4), EvenCycleLengthError);
  CHECK_THROWS_AS(construct_star_polygon_cycle(2), EvenCycleLengthError);
  CHECK_THROWS_AS(construct_star_polygon_cycle(1), EvenCycleLengthError);
  CHECK_THROWS_AS(construct_star_polygon_cycle(-5), EvenCycleLengthError);
}

TEST_CASE("caterpillar construction verifies on simple fixtures") {
  SUBCASE("3-path crosses its end segments") {
    const auto d = construct_caterpillar_straight_line(path_graph(3));
    const auto report = verify_planar_drawing(d);
    CHECK(report.is_thrackle);
  }
  SUBCASE("three-hub caterpillar") {
    const auto d = construct_caterpillar_straight_line(hub_caterpillar_12());
    const auto report = verify_planar_drawing(d);
    CHECK(report.is_thrackle);
    CHECK(report.is_general_position);
  }
  SUBCASE("single vertex and single edge") {
    CHECK(verify_planar_drawing(construct_caterpillar_straight_line(path_graph(1))).is_thrackle);
    CHECK(verify_planar_drawing(construct_caterpillar_straight_line(path_graph(2))).is_thrackle);
  }
}

TEST_CASE("non-caterpillars are rejected") {
  CHECK_THROWS_AS(construct_caterpillar_straight_line(spider_graph({2, 2, 2})),
                  NotACaterpillarError);
  CHECK_THROWS_AS(construct_caterpillar_straight_line(cycle_graph(4)), NotACaterpillarError);
}

TEST_CASE("every caterpillar up to ten vertices gets a verified drawing") {
  int checked = 0;
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : all_free_trees(n)) {
      if (!is_caterpillar(t)) continue;
      CAPTURE(n);
      const auto d = construct_caterpillar_straight_line(t);
      for (const auto& p : d.positions) CHECK(norm(p) == doctest::Approx(1.0));
      const auto report = verify_planar_drawing(d);
      CHECK(report.is_thrackle);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("spider drawing with default parameters fully verifies") {
  const auto d = construct_spider_3_2_gc();

  REQUIRE(d.graph.n == 7);
  REQUIRE(d.graph.edges.size() == 6);
  int long_count = 0;
  for (size_t e = 0; e < d.arcs.size(); ++e)
    long_count += edge_length_class(d.arcs[e]) == LengthClass::Long;
  CHECK(long_count == 1);
  CHECK(edge_length_class(d.arcs[1]) == LengthClass::Long);

  const auto spider = classify_spider(d.graph);
  REQUIRE(spider.has_value());
  CHECK(spider->center == 0);
  CHECK(spider->leg_lengths == std::vector<int>{2, 2, 2});
  CHECK(edge_bound_holds(d.graph));
  CHECK_FALSE(is_straight_line_thrackleable(d.graph));

  const auto report = verify_thrackle(document_of(d));
  CHECK(report.is_thrackle);
  CHECK(report.is_general_position);
  REQUIRE(report.pairs.size() == 15);

  const auto audit = lemma_audit(d);
  CHECK(audit.all_pass());
  CHECK(audit.pointed[0]);

  const auto spine = diameter_paths(d.graph).front();
  CHECK(conjecture3_audit(d, spine).consistent());

  CHECK(min_crossing_clearance(d) > 0.05);
}

TEST_CASE("spider parameters outside the inequalities are rejected") {
  const auto expect_throw = [](auto&& tweak) {
    SpiderConstructionParams p;
    tweak(p);
    CHECK_THROWS_AS(construct_spider_3_2_gc(p), ParamsViolateInequalitiesError);
  };
  expect_throw([](auto& p) { p.l_f1 = p.max_e2 - 0.1; });       // too short to clear C(e2)
  expect_throw([](auto& p) { p.l_f1 = kPi + 0.1; });
  expect_throw([](auto& p) { p.l_g1 = p.max_e2; });
  expect_throw([](auto& p) { p.p_f_dist = p.min_e2 + 0.05; });  // anchor too far out
  expect_throw([](auto& p) { p.p_g_dist = 0.0; });
  expect_throw([](auto& p) { p.l_e2 = 0.9 * kPi; });            // e2 must be long
  expect_throw([](auto& p) { p.l_e2 = kTwoPi; });
  expect_throw([](auto& p) { p.l_e1 = 0.0; });
  expect_throw([](auto& p) { p.bearing_f = -0.2; });            // wrong side of C(e1)
  expect_throw([](auto& p) { p.bearing_g = 0.2; });
  expect_throw([](auto& p) { p.f2_overshoot = -0.05; });
  expect_throw([](auto& p) { p.min_e2 = 0.55 * kPi; });         // claims a tighter envelope
  expect_throw([](auto& p) { p.max_e2 = 0.55 * kPi; p.l_f1 = 0.58 * kPi; });
}

TEST_CASE("spider construction responds to parameter changes") {
  // a slightly different tilt still verifies: the construction is a
  // neighborhood, not a single point
  SpiderConstructionParams p;
  p.tilt_e2 = 0.5 * kPi + 0.02;
  p.min_e2 = 0.49 * kPi;
  p.max_e2 = 0.61 * kPi;
  const auto d = construct_spider_3_2_gc(p);
  CHECK(verify_thrackle(document_of(d)).is_thrackle);
}
