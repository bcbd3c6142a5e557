#include <doctest.h>

#include <string>

#include "dubins/angle.hpp"
#include "dubins/bench.hpp"
#include "dubins/classification.hpp"

using namespace dubins;

TEST_CASE("queries depend only on seed and index") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const NormalizedProblem a = make_query(42, i, true);
    const NormalizedProblem b = make_query(42, i, true);
    CHECK(a.d() == b.d());
    CHECK(a.alpha() == b.alpha());
    CHECK(a.beta() == b.beta());
    CHECK(case_of(a) == PathCase::Short);
    CHECK(a.d() > 0.0);
  }
  CHECK(make_query(1, 0, false).d() != make_query(2, 0, false).d());
  const NormalizedProblem mixed = make_query(3, 5, false);
  CHECK(mixed.d() < kMixedMaxDistance);
  CHECK(mixed.alpha() < kTwoPi);
}

TEST_CASE("single-query bench fills every field") {
  BenchOptions options;
  options.n = 1;
  options.seed = 7;
  options.timing_rounds = 1;
  const BenchReport r = run_bench(options);
  CHECK(r.n_queries == 1);
  CHECK(r.mean_evals_classifier > 0.0);
  CHECK(r.mean_word_evals >= r.mean_evals_classifier);
  CHECK(r.mean_time_classifier_ns > 0.0);
  CHECK(r.mean_time_exhaustive_ns > 0.0);
  CHECK(r.speedup > 0.0);
  CHECK(r.mismatches == 0);
  const std::string json = to_json(r);
  for (const char* key : {"n_queries", "short_fraction", "mean_evals_classifier",
                          "mean_time_classifier_ns", "mean_time_exhaustive_ns", "speedup",
                          "mismatches"}) {
    CHECK(json.find(key) != std::string::npos);
  }
}

TEST_CASE("bench output is reproducible without timings") {
  BenchOptions options;
  options.n = 2000;
  options.seed = 42;
  options.short_only = true;
  options.timing = false;
  const BenchReport a = run_bench(options);
  const BenchReport b = run_bench(options);
  CHECK(to_json(a, false) == to_json(b, false));
  CHECK(to_csv(a, false) == to_csv(b, false));
  CHECK(a.short_fraction == 1.0);
  CHECK(a.mismatches == 0);
  CHECK(a.max_evals_classifier < 18);
  CHECK(to_json(a, false).find("speedup") == std::string::npos);
}

TEST_CASE("mixed runs contain both cases") {
  BenchOptions options;
  options.n = 2000;
  options.timing = false;
  const BenchReport r = run_bench(options);
  CHECK(r.short_fraction > 0.05);
  CHECK(r.short_fraction < 0.95);
  CHECK(r.mismatches == 0);
}

TEST_CASE("grid check") {
  SUBCASE("small sweep") {
    GridOptions options;
    options.alpha_steps = 4;
    options.beta_steps = 4;
    options.d_steps = 4;
    const GridReport r = run_grid_check(options);
    CHECK(r.queries > 0);
    CHECK(r.mismatches == 0);
  }
  SUBCASE("class filter keeps one class") {
    GridOptions options;
    options.alpha_steps = 16;
    options.beta_steps = 16;
    options.d_steps = 4;
    options.only_class = ClassId{2, 3};
    const GridReport r = run_grid_check(options);
    REQUIRE(r.per_class.size() == 1);
    CHECK(r.per_class.begin()->first == "a23");
    CHECK(to_csv(r).find("E6") != std::string::npos);
    CHECK(to_csv(r).find("E1") == std::string::npos);
  }
  SUBCASE("rejects tiny grids") {
    GridOptions options;
    options.d_steps = 1;
    CHECK_THROWS(run_grid_check(options));
  }
}
