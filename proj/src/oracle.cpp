#include "dubins/oracle.hpp"

namespace dubins {

std::string_view to_string(Method m) noexcept {
  return m == Method::Classifier ? "classifier" : "exhaustive";
}

SolveResult solve_exhaustive(const NormalizedProblem& p, CountingMode mode) {
  EvalCounter counter(mode);
  std::optional<DubinsPath> best;
  for (const PathWord w : kAllWords) {
    const auto& candidate = counter.word(w, p);
    if (!candidate) {
      continue;
    }
    if (!best || candidate->total < best->total - kTieTolerance) {
      best = candidate;
    }
  }
  SolveResult result;
  // LSL or RSR always exists: their radicand is the squared distance between circle centers.
  result.path = best.value_or(DubinsPath{});
  result.path_case = case_of(p);
  result.cls = class_of(p);
  result.evals = counter.count();
  result.pattern_evals = counter.count();
  result.method = Method::Exhaustive;
  result.counting = mode;
  return result;
}

}  // namespace dubins
