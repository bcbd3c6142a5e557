#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dubins/classification.hpp"
#include "dubins/geometry.hpp"
#include "dubins/words.hpp"

namespace dubins {

/// Upper bound of d for mixed (short + long) runs; d_t never exceeds 4.
inline constexpr double kMixedMaxDistance = 8.0;

struct QueryRecord {
  std::uint64_t index{0};
  double alpha{0.0};
  double beta{0.0};
  double d{0.0};
  PathWord word{PathWord::LSL};
  double classifier_total{0.0};
  double exhaustive_total{0.0};
  int evals{0};
};

/// Query `index` of the stream for `seed`: alpha, beta uniform on [0, 2π); d uniform on
/// (0, d_t) when `short_only`, else on (0, 8). Depends only on (seed, index).
NormalizedProblem make_query(std::uint64_t seed, std::uint64_t index, bool short_only);

struct BenchOptions {
  std::uint64_t n{100000};
  std::uint64_t seed{0};
  bool short_only{false};
  double tolerance{1e-9};
  /// Timed passes per method; the fastest pass is reported.
  int timing_rounds{3};
  bool timing{true};
  /// Eval accounting and oracle comparison; off for timing-only runs.
  bool accounting{true};
};

struct BenchReport {
  std::uint64_t n_queries{0};
  double short_fraction{0.0};
  /// Per-segment accounting with dependencies, decision plus final path.
  double mean_evals_classifier{0.0};
  int max_evals_classifier{0};
  /// Per-segment accounting, decision only (segments needed before the word is known).
  double mean_pattern_evals{0.0};
  int max_pattern_evals{0};
  /// Three per touched word.
  double mean_word_evals{0.0};
  int max_word_evals{0};
  /// Minimum per-segment decision evals over E6 (a23-like) queries; empty if none.
  std::optional<int> min_pattern_evals_e6;
  std::optional<int> min_evals_e6;
  double mean_time_classifier_ns{0.0};
  double mean_time_exhaustive_ns{0.0};
  double speedup{0.0};
  std::uint64_t mismatches{0};
  double max_excess{0.0};
};

BenchReport run_bench(const BenchOptions& options);

std::string to_json(const BenchReport& report, bool include_timing = true);
std::string to_csv(const BenchReport& report, bool include_timing = true);

struct GridOptions {
  int alpha_steps{64};
  int beta_steps{64};
  int d_steps{32};
  double tolerance{1e-9};
  std::optional<ClassId> only_class;
};

struct GridCell {
  std::uint64_t queries{0};
  std::uint64_t mismatches{0};
};

struct GridMismatch {
  double alpha{0.0};
  double beta{0.0};
  double d{0.0};
  std::string word;
  double classifier_total{0.0};
  double exhaustive_total{0.0};
};

struct GridReport {
  std::uint64_t queries{0};
  std::uint64_t mismatches{0};
  double max_excess{0.0};
  /// Keyed by class name ("a11" .. "a44").
  std::map<std::string, GridCell> per_class;
  /// First few offending queries.
  std::vector<GridMismatch> examples;
};

/// Sweeps alpha and beta over multiples of 2π/steps plus the quadrant boundaries, and d over
/// `d_steps` interior points of (0, d_t) plus 0.999 d_t. Only short-case points are checked.
GridReport run_grid_check(const GridOptions& options);

std::string to_json(const GridReport& report);
std::string to_csv(const GridReport& report);

}  // namespace dubins
