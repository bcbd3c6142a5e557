#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "dubins/angle.hpp"
#include "dubins/classification.hpp"
#include "dubins/words.hpp"
#include "support.hpp"

using namespace dubins;
using doctest::Approx;

namespace {

double endpoint_error(const DubinsPath& path, const NormalizedProblem& p) {
  const Configuration end = path_endpoint(path, p);
  return std::max(std::hypot(end.x - p.d(), end.y), test::heading_gap(end.theta, p.beta()));
}

// Squared-p expressions of the CSC closed forms, written in terms of d, alpha, beta.
double csc_radicand(PathWord w, const NormalizedProblem& p) {
  const double d = p.d();
  const double cab = std::cos(p.alpha() - p.beta());
  const double sa = p.sin_alpha();
  const double sb = p.sin_beta();
  switch (w) {
    case PathWord::LSL:
      return 2.0 + d * d - 2.0 * cab + 2.0 * d * (sa - sb);
    case PathWord::RSR:
      return 2.0 + d * d - 2.0 * cab + 2.0 * d * (sb - sa);
    case PathWord::LSR:
      return -2.0 + d * d + 2.0 * cab + 2.0 * d * (sa + sb);
    case PathWord::RSL:
      return -2.0 + d * d + 2.0 * cab - 2.0 * d * (sa + sb);
    default:
      return 0.0;
  }
}

}  // namespace

TEST_CASE("word names round trip") {
  for (const PathWord w : kAllWords) {
    CHECK(parse_word(to_string(w)) == w);
  }
  CHECK_FALSE(parse_word("LLL").has_value());
  CHECK(flip_letters(PathWord::LSR) == PathWord::RSL);
  CHECK(flip_letters(PathWord::RLR) == PathWord::LRL);
  CHECK(reverse_word(PathWord::LSR) == PathWord::RSL);
  CHECK(reverse_word(PathWord::RLR) == PathWord::RLR);
  CHECK(reverse_word(PathWord::LSL) == PathWord::LSL);
  CHECK(is_ccc(PathWord::LRL));
  CHECK_FALSE(is_ccc(PathWord::RSL));
}

TEST_CASE("word_segments examples") {
  EvalCounter counter;
  const NormalizedProblem straight{5.0, 0.0, 0.0};

  SUBCASE("LSL straight line") {
    const auto path = word_segments(PathWord::LSL, straight, counter);
    REQUIRE(path);
    CHECK(path->t == Approx(0.0));
    CHECK(path->p == Approx(5.0));
    CHECK(path->q == Approx(0.0));
    CHECK(path->total == Approx(5.0));
  }
  SUBCASE("LSR degenerates to the same straight line") {
    const auto path = word_segments(PathWord::LSR, straight, counter);
    REQUIRE(path);
    CHECK(path->t == Approx(0.0).epsilon(1e-12));
    CHECK(path->p == Approx(5.0));
    CHECK(path->q == Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("RLR at d=2 uses the major middle arc") {
    const NormalizedProblem p{2.0, 0.0, 0.0};
    const auto path = word_segments(PathWord::RLR, p, counter);
    REQUIRE(path);
    CHECK(path->t == Approx(5.0 * kPi / 6.0));
    CHECK(path->p == Approx(5.0 * kPi / 3.0));
    CHECK(path->q == Approx(5.0 * kPi / 6.0));
    CHECK(path->total == Approx(10.0 * kPi / 3.0));
    CHECK(endpoint_error(*path, p) < 1e-9);
  }
  SUBCASE("RSL infeasible when its circles overlap") {
    const NormalizedProblem p{1.0, kHalfPi, 3.0 * kHalfPi};
    CHECK_FALSE(word_segments(PathWord::RSL, p, counter).has_value());
    CHECK(csc_radicand(PathWord::RSL, p) < 0.0);
  }
}

TEST_CASE("word_length examples") {
  EvalCounter counter;
  CHECK(*word_length(PathWord::LSL, {5.0, 0.0, 0.0}, counter) == Approx(5.0));
  CHECK(*word_length(PathWord::RSR, {5.0, 0.0, 0.0}, counter) == Approx(5.0));
  CHECK(*word_length(PathWord::RLR, {2.0, 0.0, 0.0}, counter) == Approx(10.0 * kPi / 3.0));
}

TEST_CASE("d = 0 with equal headings is the empty path") {
  const NormalizedProblem p{0.0, 1.3, 1.3};
  const auto lsl = compute_segments(PathWord::LSL, p);
  REQUIRE(lsl);
  CHECK(lsl->total == 0.0);
  const auto rsr = compute_segments(PathWord::RSR, p);
  REQUIRE(rsr);
  CHECK(rsr->total == 0.0);
}

TEST_CASE("every feasible word reaches the goal") {
  std::mt19937_64 rng(10);
  int feasible = 0;
  for (int i = 0; i < 100000; ++i) {
    const NormalizedProblem p = test::random_problem(rng, i % 2 == 0 ? 4.0 : 10.0);
    for (const PathWord w : kAllWords) {
      const auto path = compute_segments(w, p);
      if (!path) {
        continue;
      }
      ++feasible;
      const double err = endpoint_error(*path, p);
      if (err > 1e-9) {
        FAIL_CHECK(to_string(w) << " misses goal by " << err << " at d=" << p.d()
                                << " alpha=" << p.alpha() << " beta=" << p.beta());
      }
      CHECK(path->total == path->t + path->p + path->q);
      CHECK(path->t >= 0.0);
      CHECK(path->t < kTwoPi);
      CHECK(path->q >= 0.0);
      CHECK(path->q < kTwoPi);
      CHECK(path->p >= 0.0);
      if (is_ccc(w)) {
        CHECK(path->p < kTwoPi);
        CHECK(path->p >= kPi);
      }
    }
  }
  CHECK(feasible > 300000);
}

TEST_CASE("mirror symmetry flips letters") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const NormalizedProblem p = test::random_problem(rng, 5.0);
    const NormalizedProblem m = p.mirrored();
    CHECK(m.alpha() == Approx(normalize_angle(kTwoPi - p.alpha())));
    for (const PathWord w : kAllWords) {
      const auto a = compute_segments(w, p);
      const auto b = compute_segments(flip_letters(w), m);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(test::heading_gap(a->t, b->t) < 1e-12);
        CHECK(std::fabs(a->p - b->p) < 1e-12 * std::max(1.0, a->p));
        CHECK(test::heading_gap(a->q, b->q) < 1e-12);
      }
    }
  }
}

TEST_CASE("swapping headings reverses and flips the word") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20000; ++i) {
    const NormalizedProblem p = test::random_problem(rng, 5.0);
    const NormalizedProblem s = p.swapped();
    for (const PathWord w : kAllWords) {
      const auto a = compute_segments(w, p);
      const auto b = compute_segments(flip_letters(reverse_word(w)), s);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(test::heading_gap(a->t, b->q) < 1e-12);
        CHECK(std::fabs(a->p - b->p) < 1e-12 * std::max(1.0, a->p));
        CHECK(test::heading_gap(a->q, b->t) < 1e-12);
      }
    }
  }
}

TEST_CASE("CSC middle length squares to the closed-form radicand") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20000; ++i) {
    const NormalizedProblem p = test::random_problem(rng, 6.0);
    for (const PathWord w : {PathWord::LSL, PathWord::RSR, PathWord::LSR, PathWord::RSL}) {
      const auto path = compute_segments(w, p);
      const double radicand = csc_radicand(w, p);
      const double scale = std::max(1.0, p.d() * p.d());
      if (path) {
        CHECK(std::fabs(path->p * path->p - radicand) < 1e-12 * 8.0 * scale);
      } else {
        CHECK(radicand < 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("RSL and RLR coincide when C_ir and C_fl touch") {
  // At tangency RSL is R(t) followed by an arc of C_fl. RLR describes the same curve when its
  // middle circle is C_fl itself; the other candidate middle circle gives a different path.
  std::mt19937_64 rng(14);
  int same_circle = 0;
  int other_circle = 0;
  for (int i = 0; i < 5000; ++i) {
    const double alpha = test::uniform(rng, 0.0, kTwoPi);
    const double beta = test::uniform(rng, 0.0, kTwoPi);
    const double sa = std::sin(alpha);
    const double sb = std::sin(beta);
    const double sum_cos = std::cos(alpha) + std::cos(beta);
    const double h = std::sqrt(std::max(0.0, 4.0 - sum_cos * sum_cos));
    for (const double d : {sa + sb + h, sa + sb - h}) {
      if (d <= 0.0) {
        continue;
      }
      const NormalizedProblem p{d, alpha, beta};
      const auto rsl = compute_segments(PathWord::RSL, p);
      const auto rlr = compute_segments(PathWord::RLR, p);
      if (!rsl || !rlr) {
        continue;
      }
      const Configuration knee = apply_operator(Motion::Right, rlr->t, p.start());
      const Vec2 middle{knee.x - std::sin(knee.theta), knee.y + std::cos(knee.theta)};
      if (distance(middle, circle(turning_centers(p), CircleTag::FinalLeft).center) > 1e-6) {
        ++other_circle;
        continue;
      }
      ++same_circle;
      // The closing arc may come out as 0 or as a full turn just below 2π.
      const double gap = std::fabs(rsl->total - rlr->total);
      CHECK(std::min(gap, std::fabs(gap - kTwoPi)) < 1e-9);
    }
  }
  MESSAGE("middle circle is C_fl: " << same_circle << ", other circle: " << other_circle);
  CHECK(same_circle > 1000);
}

TEST_CASE("EvalCounter per-word accounting") {
  const NormalizedProblem p{1.0, 0.4, 2.0};
  EvalCounter counter(CountingMode::PerWord);
  counter.word(PathWord::LSL, p);
  CHECK(counter.count() == 3);
  counter.word(PathWord::LSL, p);
  CHECK(counter.count() == 3);
  counter.segment(PathWord::RSR, SegmentIndex::First, p);
  CHECK(counter.count() == 6);
  counter.segment(PathWord::RSR, SegmentIndex::Last, p);
  CHECK(counter.count() == 6);
  for (const PathWord w : kAllWords) {
    counter.word(w, p);
  }
  CHECK(counter.count() == EvalCounter::kMaxCount);
  CHECK(counter.touched(PathWord::LRL));
}

TEST_CASE("EvalCounter per-segment accounting with dependencies") {
  const NormalizedProblem p{1.0, 0.4, 2.0};
  EvalCounter counter(CountingMode::PerSegment);
  counter.segment(PathWord::RLR, SegmentIndex::Middle, p);
  CHECK(counter.count() == 1);
  counter.segment(PathWord::RLR, SegmentIndex::Last, p);
  CHECK(counter.count() == 3);
  counter.segment(PathWord::RSR, SegmentIndex::First, p);
  CHECK(counter.count() == 4);
  counter.segment(PathWord::LSR, SegmentIndex::First, p);
  CHECK(counter.count() == 6);
  counter.word(PathWord::LSR, p);
  CHECK(counter.count() == 7);
  counter.word(PathWord::LSR, p);
  CHECK(counter.count() == 7);
}

TEST_CASE("infeasible segment requests name the word") {
  const NormalizedProblem p{1.0, kHalfPi, 3.0 * kHalfPi};
  EvalCounter counter;
  try {
    counter.segment(PathWord::RSL, SegmentIndex::Middle, p);
    FAIL("expected an infeasible-word error");
  } catch (const InfeasibleWordError& e) {
    CHECK(e.word() == PathWord::RSL);
    CHECK(std::string(e.what()).find("RSL") != std::string::npos);
  }
}
