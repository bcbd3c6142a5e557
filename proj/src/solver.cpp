#include "dubins/solver.hpp"

namespace dubins {

Solution solve_query(const Configuration& start, const Configuration& goal, double radius,
                     CountingMode mode) {
  auto [problem, frame] = normalize(start, goal, radius);
  SolveResult result = solve_normalized(problem, mode);
  result.radius = radius;
  return {result, problem, frame};
}

SolveResult solve(const Configuration& start, const Configuration& goal, double radius,
                  CountingMode mode) {
  return solve_query(start, goal, radius, mode).result;
}

}  // namespace dubins
