#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace dubins {

struct Vec2 {
  double x{0.0};
  double y{0.0};
};

double distance(const Vec2& a, const Vec2& b) noexcept;

/// Planar pose. The heading is always kept in [0, 2π).
struct Configuration {
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  Configuration() = default;
  Configuration(double x_in, double y_in, double theta_in);

  [[nodiscard]] Vec2 position() const noexcept { return {x, y}; }
};

/// Canonical unit-radius problem: start (0, 0, alpha), goal (d, 0, beta).
///
/// Sines and cosines of both headings are cached at construction because every
/// segment formula needs them; the mirrored/swapped images reuse them so that
/// equivalent problems see bit-identical trigonometry.
class NormalizedProblem {
 public:
  NormalizedProblem(double d, double alpha, double beta);

  [[nodiscard]] double d() const noexcept { return d_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double sin_alpha() const noexcept { return sin_alpha_; }
  [[nodiscard]] double cos_alpha() const noexcept { return cos_alpha_; }
  [[nodiscard]] double sin_beta() const noexcept { return sin_beta_; }
  [[nodiscard]] double cos_beta() const noexcept { return cos_beta_; }

  /// (2π - alpha, 2π - beta): reflection about the x axis.
  [[nodiscard]] NormalizedProblem mirrored() const noexcept;
  /// (beta, alpha): the same pair of poses traversed from the other end.
  [[nodiscard]] NormalizedProblem swapped() const noexcept;

  [[nodiscard]] Configuration start() const { return {0.0, 0.0, alpha_}; }
  [[nodiscard]] Configuration goal() const { return {d_, 0.0, beta_}; }

 private:
  struct Raw {};
  NormalizedProblem(Raw, double d, double alpha, double beta, double sa, double ca, double sb,
                    double cb) noexcept;

  double d_;
  double alpha_;
  double beta_;
  double sin_alpha_;
  double cos_alpha_;
  double sin_beta_;
  double cos_beta_;
};

/// Similarity transform between the world frame and the normalized frame.
struct FrameTransform {
  Vec2 translation{};
  double rotation{0.0};
  double scale{1.0};

  [[nodiscard]] Configuration to_normalized(const Configuration& world) const;
  [[nodiscard]] Configuration to_world(const Configuration& normalized) const;
};

/// Maps (start, goal, radius) into the canonical frame. Throws std::invalid_argument on
/// non-finite input or a non-positive radius.
std::pair<NormalizedProblem, FrameTransform> normalize(const Configuration& start,
                                                       const Configuration& goal, double radius);

enum class Motion : std::uint8_t { Left, Right, Straight };

char motion_letter(Motion m) noexcept;

/// Moves `length` along the given primitive from `from` on a unit-radius circle.
/// Throws std::invalid_argument for negative or non-finite lengths.
Configuration apply_operator(Motion m, double length, const Configuration& from);

enum class CircleTag : std::uint8_t { InitialLeft, InitialRight, FinalLeft, FinalRight };

std::string_view circle_name(CircleTag tag) noexcept;

struct CircleCenter {
  CircleTag tag{CircleTag::InitialLeft};
  Vec2 center{};
  double radius{1.0};
};

/// Indexed by CircleTag.
using TurningCircles = std::array<CircleCenter, 4>;

TurningCircles turning_centers(const NormalizedProblem& p) noexcept;

inline const CircleCenter& circle(const TurningCircles& circles, CircleTag tag) noexcept {
  return circles[static_cast<std::size_t>(tag)];
}

}  // namespace dubins
