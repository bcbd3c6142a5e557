#pragma once

#include "dubins/classifier.hpp"
#include "dubins/geometry.hpp"
#include "dubins/oracle.hpp"

namespace dubins {

/// A solved world query together with the frame it was solved in.
struct Solution {
  SolveResult result;
  NormalizedProblem problem;
  FrameTransform frame;
};

/// normalize -> case_of -> solve_short (short) or solve_exhaustive (long).
/// Throws std::invalid_argument for a non-positive radius or non-finite input.
Solution solve_query(const Configuration& start, const Configuration& goal, double radius,
                     CountingMode mode = CountingMode::PerWord);

/// Same as solve_query, keeping only the result. `result.world_path()` is in world units.
SolveResult solve(const Configuration& start, const Configuration& goal, double radius,
                  CountingMode mode = CountingMode::PerWord);

}  // namespace dubins
