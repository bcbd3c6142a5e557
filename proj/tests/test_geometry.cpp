#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dubins/angle.hpp"
#include "dubins/geometry.hpp"
#include "dubins/oracle.hpp"
#include "dubins/solver.hpp"
#include "support.hpp"

using namespace dubins;
using doctest::Approx;

TEST_CASE("normalize_angle wraps into [0, 2pi)") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(kTwoPi) == 0.0);
  CHECK(normalize_angle(-kHalfPi) == Approx(3.0 * kHalfPi));
  CHECK(normalize_angle(5.0 * kPi) == Approx(kPi));
  CHECK(normalize_angle(-1e-300) < kTwoPi);
}

TEST_CASE("normalize_angle is idempotent") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double a = test::uniform(rng, -100.0, 100.0);
    const double once = normalize_angle(a);
    CHECK(once >= 0.0);
    CHECK(once < kTwoPi);
    CHECK(normalize_angle(once) == once);
  }
}

TEST_CASE("angle_difference lies in (-pi, pi]") {
  CHECK(angle_difference(0.1, kTwoPi - 0.1) == Approx(0.2));
  CHECK(angle_difference(kPi, 0.0) == Approx(kPi));
  CHECK(angle_difference(0.0, kPi) == Approx(kPi));
}

TEST_CASE("Configuration stores a normalized heading") {
  const Configuration c{1.0, 2.0, -kHalfPi};
  CHECK(c.theta == Approx(3.0 * kHalfPi));
}

TEST_CASE("NormalizedProblem rejects bad input") {
  CHECK_THROWS_AS(NormalizedProblem(-1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(NormalizedProblem(std::nan(""), 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(NormalizedProblem(1.0, std::numeric_limits<double>::infinity(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("normalize examples") {
  SUBCASE("already canonical") {
    const auto [p, frame] = normalize({0, 0, 0}, {5, 0, 0}, 1.0);
    CHECK(p.d() == Approx(5.0));
    CHECK(p.alpha() == 0.0);
    CHECK(p.beta() == 0.0);
  }
  SUBCASE("rotated frame") {
    const auto [p, frame] = normalize({1, 1, kHalfPi}, {1, 4, kHalfPi}, 1.0);
    CHECK(p.d() == Approx(3.0));
    CHECK(test::heading_gap(p.alpha(), 0.0) < 1e-12);
    CHECK(test::heading_gap(p.beta(), 0.0) < 1e-12);
    const Configuration s = frame.to_world({0, 0, 0});
    const Configuration g = frame.to_world({3, 0, 0});
    CHECK(s.x == Approx(1.0));
    CHECK(s.y == Approx(1.0));
    CHECK(g.x == Approx(1.0));
    CHECK(g.y == Approx(4.0));
    CHECK(test::heading_gap(g.theta, kHalfPi) < 1e-12);
  }
  SUBCASE("scaled by the radius") {
    const auto [p, frame] = normalize({0, 0, 0}, {10, 0, 0}, 2.0);
    CHECK(p.d() == Approx(5.0));
    CHECK(frame.scale == 2.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(normalize({0, 0, 0}, {1, 0, 0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(normalize({0, 0, 0}, {1, 0, 0}, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(normalize({std::nan(""), 0, 0}, {1, 0, 0}, 1.0), std::invalid_argument);
  }
}

TEST_CASE("FrameTransform round trip") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const Configuration start{test::uniform(rng, -50, 50), test::uniform(rng, -50, 50),
                              test::uniform(rng, 0, kTwoPi)};
    const Configuration goal{test::uniform(rng, -50, 50), test::uniform(rng, -50, 50),
                             test::uniform(rng, 0, kTwoPi)};
    const auto [p, frame] = normalize(start, goal, test::uniform(rng, 0.1, 10.0));
    const Configuration w{test::uniform(rng, -20, 20), test::uniform(rng, -20, 20),
                          test::uniform(rng, 0, kTwoPi)};
    const Configuration back = frame.to_normalized(frame.to_world(w));
    CHECK(std::fabs(back.x - w.x) < 1e-12 * 100);
    CHECK(std::fabs(back.y - w.y) < 1e-12 * 100);
    CHECK(test::heading_gap(back.theta, w.theta) < 1e-12);
    const Configuration g = frame.to_normalized(goal);
    CHECK(std::fabs(g.x - p.d()) < 1e-9);
    CHECK(std::fabs(g.y) < 1e-9);
  }
}

TEST_CASE("solved paths map back onto the world goal") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Configuration start{test::uniform(rng, -20, 20), test::uniform(rng, -20, 20),
                              test::uniform(rng, 0, kTwoPi)};
    const Configuration goal{test::uniform(rng, -20, 20), test::uniform(rng, -20, 20),
                             test::uniform(rng, 0, kTwoPi)};
    const Solution s = solve_query(start, goal, test::uniform(rng, 0.2, 5.0));
    const Configuration end = s.frame.to_world(path_endpoint(s.result.path, s.problem));
    const double scale = std::max(1.0, s.problem.d());
    CHECK(std::hypot(end.x - goal.x, end.y - goal.y) < 1e-9 * scale * s.frame.scale);
    CHECK(test::heading_gap(end.theta, goal.theta) < 1e-9);
  }
}

TEST_CASE("apply_operator examples") {
  const Configuration s = apply_operator(Motion::Straight, 5.0, {0, 0, 0});
  CHECK(s.x == Approx(5.0));
  CHECK(s.y == Approx(0.0));
  CHECK(s.theta == 0.0);

  const Configuration l = apply_operator(Motion::Left, kHalfPi, {0, 0, 0});
  CHECK(l.x == Approx(1.0));
  CHECK(l.y == Approx(1.0));
  CHECK(l.theta == Approx(kHalfPi));

  const Configuration start{0.3, -1.2, 2.0};
  const Configuration r = apply_operator(Motion::Right, kTwoPi, start);
  CHECK(r.x == Approx(start.x));
  CHECK(r.y == Approx(start.y));
  CHECK(test::heading_gap(r.theta, start.theta) < 1e-12);

  CHECK_THROWS_AS(apply_operator(Motion::Left, -0.1, start), std::invalid_argument);
}

TEST_CASE("turning_centers examples") {
  const TurningCircles a0 = turning_centers({3.0, 0.0, kHalfPi});
  CHECK(circle(a0, CircleTag::InitialLeft).center.x == Approx(0.0));
  CHECK(circle(a0, CircleTag::InitialLeft).center.y == Approx(1.0));
  CHECK(circle(a0, CircleTag::InitialRight).center.y == Approx(-1.0));
  CHECK(circle(a0, CircleTag::FinalLeft).center.x == Approx(2.0));
  CHECK(circle(a0, CircleTag::FinalLeft).center.y == Approx(0.0).epsilon(1e-12));
  CHECK(circle(a0, CircleTag::FinalRight).center.x == Approx(4.0));

  const TurningCircles api = turning_centers({1.0, kPi, 0.0});
  CHECK(circle(api, CircleTag::InitialLeft).center.y == Approx(-1.0));
  CHECK(circle(api, CircleTag::InitialRight).center.y == Approx(1.0));
  CHECK(circle(api, CircleTag::InitialLeft).tag == CircleTag::InitialLeft);
  CHECK(circle(api, CircleTag::FinalRight).radius == 1.0);
}

TEST_CASE("turning circles are tangent to the start and goal headings") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const NormalizedProblem p = test::random_problem(rng);
    const TurningCircles c = turning_centers(p);
    // A quarter turn from the start pose lands one radius from the center, on the circle.
    const Configuration left = apply_operator(Motion::Left, kPi, p.start());
    const Vec2 il = circle(c, CircleTag::InitialLeft).center;
    CHECK(std::hypot(left.x - il.x, left.y - il.y) == Approx(1.0));
    CHECK(std::hypot(il.x, il.y) == Approx(1.0));
    const Vec2 fr = circle(c, CircleTag::FinalRight).center;
    CHECK(std::hypot(fr.x - p.d(), fr.y) == Approx(1.0));
  }
}
