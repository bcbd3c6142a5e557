#include "dubins/words.hpp"

#include <bit>
#include <cmath>

#include "dubins/angle.hpp"

namespace dubins {

std::string_view to_string(PathWord w) noexcept {
  switch (w) {
    case PathWord::LSL:
      return "LSL";
    case PathWord::RSR:
      return "RSR";
    case PathWord::LSR:
      return "LSR";
    case PathWord::RSL:
      return "RSL";
    case PathWord::RLR:
      return "RLR";
    case PathWord::LRL:
      return "LRL";
  }
  return "???";
}

std::optional<PathWord> parse_word(std::string_view text) noexcept {
  for (const PathWord w : kAllWords) {
    if (to_string(w) == text) {
      return w;
    }
  }
  return std::nullopt;
}

std::array<Motion, 3> motions(PathWord w) noexcept {
  using enum Motion;
  switch (w) {
    case PathWord::LSL:
      return {Left, Straight, Left};
    case PathWord::RSR:
      return {Right, Straight, Right};
    case PathWord::LSR:
      return {Left, Straight, Right};
    case PathWord::RSL:
      return {Right, Straight, Left};
    case PathWord::RLR:
      return {Right, Left, Right};
    case PathWord::LRL:
      return {Left, Right, Left};
  }
  return {Straight, Straight, Straight};
}

bool is_ccc(PathWord w) noexcept { return w == PathWord::RLR || w == PathWord::LRL; }

PathWord flip_letters(PathWord w) noexcept {
  switch (w) {
    case PathWord::LSL:
      return PathWord::RSR;
    case PathWord::RSR:
      return PathWord::LSL;
    case PathWord::LSR:
      return PathWord::RSL;
    case PathWord::RSL:
      return PathWord::LSR;
    case PathWord::RLR:
      return PathWord::LRL;
    case PathWord::LRL:
      return PathWord::RLR;
  }
  return w;
}

PathWord reverse_word(PathWord w) noexcept {
  switch (w) {
    case PathWord::LSR:
      return PathWord::RSL;
    case PathWord::RSL:
      return PathWord::LSR;
    default:
      return w;  // palindromes
  }
}

std::string_view to_string(CountingMode m) noexcept {
  return m == CountingMode::PerWord ? "word" : "segment";
}

Configuration path_endpoint(const DubinsPath& path, const NormalizedProblem& p) {
  const auto ops = motions(path.word);
  Configuration c = p.start();
  c = apply_operator(ops[0], path.t, c);
  c = apply_operator(ops[1], path.p, c);
  c = apply_operator(ops[2], path.q, c);
  return c;
}

namespace {

// Direction of the connecting tangent. When both arguments vanish the connecting segment has
// zero length and any direction closes the path; `fallback` is chosen so the first arc is empty.
double direction(double y, double x, double fallback) noexcept {
  return (y == 0.0 && x == 0.0) ? fallback : std::atan2(y, x);
}

std::optional<DubinsPath> lsl(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  // Squared distance between the two left circles; always >= 0.
  const double dx = d + sa - sb;
  const double dy = cb - ca;
  const double radicand = dx * dx + dy * dy;
  const double heading = direction(dy, dx, a);
  return DubinsPath::make(PathWord::LSL, normalize_angle(heading - a), std::sqrt(radicand),
                          normalize_angle(b - heading));
}

std::optional<DubinsPath> rsr(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  const double dx = d - sa + sb;
  const double dy = ca - cb;
  const double radicand = dx * dx + dy * dy;
  const double heading = direction(dy, dx, a);
  return DubinsPath::make(PathWord::RSR, normalize_angle(a - heading), std::sqrt(radicand),
                          normalize_angle(heading - b));
}

std::optional<DubinsPath> lsr(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  // |C_il - C_fr|^2 - 4: negative when the circles overlap and no cross tangent exists.
  const double dx = d + sa + sb;
  const double dy = -ca - cb;
  const double radicand = dx * dx + dy * dy - 4.0;
  if (radicand < 0.0) {
    return std::nullopt;
  }
  const double p = std::sqrt(radicand);
  const double heading = std::atan2(dy, dx) - std::atan2(-2.0, p);
  return DubinsPath::make(PathWord::LSR, normalize_angle(heading - a), p,
                          normalize_angle(heading - b));
}

std::optional<DubinsPath> rsl(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  const double dx = d - sa - sb;
  const double dy = ca + cb;
  const double radicand = dx * dx + dy * dy - 4.0;
  if (radicand < 0.0) {
    return std::nullopt;
  }
  const double p = std::sqrt(radicand);
  const double heading = std::atan2(dy, dx) - std::atan2(2.0, p);
  return DubinsPath::make(PathWord::RSL, normalize_angle(a - heading), p,
                          normalize_angle(b - heading));
}

std::optional<DubinsPath> rlr(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  // Outer circles C_ir, C_fr; the middle circle touches both iff their distance is <= 4.
  const double dx = d - sa + sb;
  const double dy = ca - cb;
  const double c = 1.0 - (dx * dx + dy * dy) / 8.0;
  if (c < -1.0) {
    return std::nullopt;
  }
  const double middle = kTwoPi - std::acos(c);
  const double heading = direction(dy, dx, a + kPi);
  const double t = normalize_angle(a - heading + 0.5 * middle);
  const double q = normalize_angle(a - b - t + middle);
  return DubinsPath::make(PathWord::RLR, t, normalize_angle(middle), q);
}

std::optional<DubinsPath> lrl(double d, double a, double b, double sa, double ca, double sb,
                              double cb) noexcept {
  const double dx = d + sa - sb;
  const double dy = cb - ca;
  const double c = 1.0 - (dx * dx + dy * dy) / 8.0;
  if (c < -1.0) {
    return std::nullopt;
  }
  const double middle = kTwoPi - std::acos(c);
  const double heading = direction(dy, dx, a - kPi);
  const double t = normalize_angle(-a + heading + 0.5 * middle);
  const double q = normalize_angle(b - a - t + middle);
  return DubinsPath::make(PathWord::LRL, t, normalize_angle(middle), q);
}

}  // namespace

std::optional<DubinsPath> compute_segments(PathWord w, const NormalizedProblem& p) noexcept {
  const double d = p.d();
  const double a = p.alpha();
  const double b = p.beta();
  const double sa = p.sin_alpha();
  const double ca = p.cos_alpha();
  const double sb = p.sin_beta();
  const double cb = p.cos_beta();
  switch (w) {
    case PathWord::LSL:
      return lsl(d, a, b, sa, ca, sb, cb);
    case PathWord::RSR:
      return rsr(d, a, b, sa, ca, sb, cb);
    case PathWord::LSR:
      return lsr(d, a, b, sa, ca, sb, cb);
    case PathWord::RSL:
      return rsl(d, a, b, sa, ca, sb, cb);
    case PathWord::RLR:
      return rlr(d, a, b, sa, ca, sb, cb);
    case PathWord::LRL:
      return lrl(d, a, b, sa, ca, sb, cb);
  }
  return std::nullopt;
}

std::optional<double> compute_middle(PathWord w, const NormalizedProblem& p) noexcept {
  const double d = p.d();
  const double sa = p.sin_alpha();
  const double ca = p.cos_alpha();
  const double sb = p.sin_beta();
  const double cb = p.cos_beta();
  // Same expressions as the full kernels above.
  double dx = 0.0;
  double dy = 0.0;
  switch (w) {
    case PathWord::LSL:
    case PathWord::LRL:
      dx = d + sa - sb;
      dy = cb - ca;
      break;
    case PathWord::RSR:
    case PathWord::RLR:
      dx = d - sa + sb;
      dy = ca - cb;
      break;
    case PathWord::LSR:
      dx = d + sa + sb;
      dy = -ca - cb;
      break;
    case PathWord::RSL:
      dx = d - sa - sb;
      dy = ca + cb;
      break;
  }
  switch (w) {
    case PathWord::LSL:
    case PathWord::RSR:
      return std::sqrt(dx * dx + dy * dy);
    case PathWord::LSR:
    case PathWord::RSL: {
      const double radicand = dx * dx + dy * dy - 4.0;
      if (radicand < 0.0) {
        return std::nullopt;
      }
      return std::sqrt(radicand);
    }
    case PathWord::RLR:
    case PathWord::LRL: {
      const double c = 1.0 - (dx * dx + dy * dy) / 8.0;
      if (c < -1.0) {
        return std::nullopt;
      }
      return normalize_angle(kTwoPi - std::acos(c));
    }
  }
  return std::nullopt;
}

InfeasibleWordError::InfeasibleWordError(PathWord w)
    : std::logic_error("segment requested from infeasible word " + std::string(to_string(w))),
      word_(w) {}

namespace {

constexpr std::uint8_t kFirst = 1U;
constexpr std::uint8_t kMiddle = 2U;
constexpr std::uint8_t kLast = 4U;
constexpr std::uint8_t kAll = kFirst | kMiddle | kLast;

std::uint8_t dependency_mask(PathWord w, SegmentIndex s) noexcept {
  switch (s) {
    case SegmentIndex::Middle:
      return kMiddle;
    case SegmentIndex::First:
      return (w == PathWord::LSL || w == PathWord::RSR) ? kFirst : (kFirst | kMiddle);
    case SegmentIndex::Last:
      if (w == PathWord::LSL || w == PathWord::RSR) {
        return kLast;
      }
      return is_ccc(w) ? kAll : (kLast | kMiddle);
  }
  return kAll;
}

}  // namespace

void EvalCounter::charge(PathWord w, std::uint8_t mask) noexcept {
  std::uint8_t& charged = charged_[index(w)];
  const auto fresh = static_cast<std::uint8_t>(mask & ~charged);
  if (fresh == 0) {
    return;
  }
  if (mode_ == CountingMode::PerWord) {
    if (charged == 0) {
      count_ += 3;
    }
    charged = kAll;
    return;
  }
  count_ += std::popcount(fresh);
  charged = static_cast<std::uint8_t>(charged | fresh);
}

const std::optional<DubinsPath>& EvalCounter::ensure(PathWord w, const NormalizedProblem& p) {
  const std::size_t i = index(w);
  if (!computed_[i]) {
    memo_[i] = compute_segments(w, p);
    computed_[i] = true;
  }
  return memo_[i];
}

const std::optional<DubinsPath>& EvalCounter::word(PathWord w, const NormalizedProblem& p) {
  charge(w, kAll);
  return ensure(w, p);
}

double EvalCounter::segment(PathWord w, SegmentIndex s, const NormalizedProblem& p) {
  charge(w, dependency_mask(w, s));
  const std::size_t i = index(w);
  if (s == SegmentIndex::Middle && !computed_[i]) {
    if (!middle_computed_[i]) {
      middle_memo_[i] = compute_middle(w, p);
      middle_computed_[i] = true;
    }
    if (!middle_memo_[i]) {
      throw InfeasibleWordError(w);
    }
    return *middle_memo_[i];
  }
  const auto& path = ensure(w, p);
  if (!path) {
    throw InfeasibleWordError(w);
  }
  return path->segment(s);
}

std::optional<DubinsPath> word_segments(PathWord w, const NormalizedProblem& p, EvalCounter& counter) {
  return counter.word(w, p);
}

std::optional<double> word_length(PathWord w, const NormalizedProblem& p, EvalCounter& counter) {
  const auto& path = counter.word(w, p);
  if (!path) {
    return std::nullopt;
  }
  return path->total;
}

}  // namespace dubins
