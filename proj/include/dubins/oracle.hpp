#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dubins/classification.hpp"
#include "dubins/geometry.hpp"
#include "dubins/words.hpp"

namespace dubins {

enum class Method : std::uint8_t { Classifier, Exhaustive };

std::string_view to_string(Method m) noexcept;

/// Outcome of one shortest-path query. `path` is in normalized (unit-radius) units;
/// world lengths are obtained by multiplying by `radius`.
struct SolveResult {
  DubinsPath path;
  PathCase path_case{PathCase::Short};
  std::optional<ClassId> cls;
  /// Segment evaluations charged for the whole solve (decision plus final path).
  int evals{0};
  /// Segment evaluations charged before the word was known.
  int pattern_evals{0};
  Method method{Method::Exhaustive};
  CountingMode counting{CountingMode::PerWord};
  double radius{1.0};

  [[nodiscard]] DubinsPath world_path() const noexcept {
    return DubinsPath::make(path.word, path.t * radius, path.p * radius, path.q * radius);
  }
};

/// Totals closer than this are ties, resolved by canonical word order.
inline constexpr double kTieTolerance = 1e-12;

/// Evaluates all six words and keeps the shortest feasible one. No pruning.
SolveResult solve_exhaustive(const NormalizedProblem& p,
                             CountingMode mode = CountingMode::PerWord);

}  // namespace dubins
