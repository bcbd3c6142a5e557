#pragma once

#include <numbers>

namespace dubins {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps any finite angle into [0, 2π). Non-finite input is returned unchanged.
double normalize_angle(double angle) noexcept;

/// Signed angular difference a - b wrapped into (-π, π].
double angle_difference(double a, double b) noexcept;

}  // namespace dubins
