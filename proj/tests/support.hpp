#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dubins/angle.hpp"
#include "dubins/classification.hpp"
#include "dubins/geometry.hpp"

namespace dubins::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline NormalizedProblem random_problem(std::mt19937_64& rng, double max_d = 8.0) {
  return {uniform(rng, 0.0, max_d), uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, kTwoPi)};
}

/// Short case with d strictly inside (0, d_t).
inline NormalizedProblem random_short(std::mt19937_64& rng) {
  for (;;) {
    const double alpha = uniform(rng, 0.0, kTwoPi);
    const double beta = uniform(rng, 0.0, kTwoPi);
    const NormalizedProblem p{uniform(rng, 0.0, threshold_distance(alpha, beta)), alpha, beta};
    if (p.d() > 0.0 && case_of(p) == PathCase::Short) {
      return p;
    }
  }
}

/// Distance between two headings on the circle.
inline double heading_gap(double a, double b) {
  return std::fabs(angle_difference(a, b));
}

}  // namespace dubins::test
