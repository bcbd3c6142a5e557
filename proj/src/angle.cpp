#include "dubins/angle.hpp"

#include <cmath>

namespace dubins {

double normalize_angle(double angle) noexcept {
  if (angle >= 0.0 && angle < kTwoPi) {
    return angle;
  }
  // Exact by Sterbenz' lemma, so this agrees with the fmod path bit for bit.
  if (angle >= kTwoPi && angle < 2.0 * kTwoPi) {
    return angle - kTwoPi;
  }
  // fmod returns these unchanged, so only the shift below applies.
  if (angle < 0.0 && angle > -kTwoPi) {
    const double shifted = angle + kTwoPi;
    return shifted >= kTwoPi ? 0.0 : shifted;
  }
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) {
    wrapped += kTwoPi;
  }
  // fmod of a tiny negative value lands on 2π after the shift.
  if (wrapped >= kTwoPi) {
    wrapped = 0.0;
  }
  return wrapped;
}

double angle_difference(double a, double b) noexcept {
  double diff = normalize_angle(a - b);
  if (diff > kPi) {
    diff -= kTwoPi;
  }
  return diff;
}

}  // namespace dubins
