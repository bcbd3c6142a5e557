#include "dubins/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dubins/angle.hpp"

namespace dubins {

double distance(const Vec2& a, const Vec2& b) noexcept { return std::hypot(b.x - a.x, b.y - a.y); }

Configuration::Configuration(double x_in, double y_in, double theta_in)
    : x(x_in), y(y_in), theta(normalize_angle(theta_in)) {}

NormalizedProblem::NormalizedProblem(double d, double alpha, double beta)
    : d_(d), alpha_(normalize_angle(alpha)), beta_(normalize_angle(beta)) {
  if (!std::isfinite(d) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("normalized problem requires finite d, alpha, beta");
  }
  if (d < 0.0) {
    throw std::invalid_argument("normalized distance must be nonnegative, got " + std::to_string(d));
  }
  sin_alpha_ = std::sin(alpha_);
  cos_alpha_ = std::cos(alpha_);
  sin_beta_ = std::sin(beta_);
  cos_beta_ = std::cos(beta_);
}

NormalizedProblem::NormalizedProblem(Raw, double d, double alpha, double beta, double sa, double ca,
                                     double sb, double cb) noexcept
    : d_(d),
      alpha_(alpha),
      beta_(beta),
      sin_alpha_(sa),
      cos_alpha_(ca),
      sin_beta_(sb),
      cos_beta_(cb) {}

NormalizedProblem NormalizedProblem::mirrored() const noexcept {
  return {Raw{},         d_,         normalize_angle(-alpha_), normalize_angle(-beta_),
          -sin_alpha_ + 0.0, cos_alpha_, -sin_beta_ + 0.0,        cos_beta_};
}

NormalizedProblem NormalizedProblem::swapped() const noexcept {
  return {Raw{}, d_, beta_, alpha_, sin_beta_, cos_beta_, sin_alpha_, cos_alpha_};
}

Configuration FrameTransform::to_normalized(const Configuration& world) const {
  const double dx = world.x - translation.x;
  const double dy = world.y - translation.y;
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return {(c * dx + s * dy) / scale, (-s * dx + c * dy) / scale, world.theta - rotation};
}

Configuration FrameTransform::to_world(const Configuration& normalized) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  const double x = normalized.x * scale;
  const double y = normalized.y * scale;
  return {translation.x + c * x - s * y, translation.y + s * x + c * y, normalized.theta + rotation};
}

std::pair<NormalizedProblem, FrameTransform> normalize(const Configuration& start,
                                                       const Configuration& goal, double radius) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw std::invalid_argument("turning radius must be positive and finite");
  }
  for (const double v : {start.x, start.y, start.theta, goal.x, goal.y, goal.theta}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("start and goal must be finite");
    }
  }
  const double dx = goal.x - start.x;
  const double dy = goal.y - start.y;
  const double span = std::hypot(dx, dy);
  FrameTransform frame;
  frame.translation = start.position();
  frame.rotation = span > 0.0 ? std::atan2(dy, dx) : 0.0;
  frame.scale = radius;
  NormalizedProblem problem(span / radius, start.theta - frame.rotation, goal.theta - frame.rotation);
  return {problem, frame};
}

char motion_letter(Motion m) noexcept {
  switch (m) {
    case Motion::Left:
      return 'L';
    case Motion::Right:
      return 'R';
    case Motion::Straight:
      return 'S';
  }
  return '?';
}

Configuration apply_operator(Motion m, double length, const Configuration& from) {
  if (!std::isfinite(length) || length < 0.0) {
    throw std::invalid_argument("segment length must be nonnegative and finite");
  }
  const double phi = from.theta;
  switch (m) {
    case Motion::Left:
      return {from.x + std::sin(phi + length) - std::sin(phi),
              from.y - std::cos(phi + length) + std::cos(phi), phi + length};
    case Motion::Right:
      return {from.x - std::sin(phi - length) + std::sin(phi),
              from.y + std::cos(phi - length) - std::cos(phi), phi - length};
    case Motion::Straight:
      return {from.x + length * std::cos(phi), from.y + length * std::sin(phi), phi};
  }
  return from;
}

std::string_view circle_name(CircleTag tag) noexcept {
  switch (tag) {
    case CircleTag::InitialLeft:
      return "il";
    case CircleTag::InitialRight:
      return "ir";
    case CircleTag::FinalLeft:
      return "fl";
    case CircleTag::FinalRight:
      return "fr";
  }
  return "?";
}

TurningCircles turning_centers(const NormalizedProblem& p) noexcept {
  const double sa = p.sin_alpha();
  const double ca = p.cos_alpha();
  const double sb = p.sin_beta();
  const double cb = p.cos_beta();
  const double d = p.d();
  return {{
      {CircleTag::InitialLeft, {-sa, ca}, 1.0},
      {CircleTag::InitialRight, {sa, -ca}, 1.0},
      {CircleTag::FinalLeft, {d - sb, cb}, 1.0},
      {CircleTag::FinalRight, {d + sb, -cb}, 1.0},
  }};
}

}  // namespace dubins
