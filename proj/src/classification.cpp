#include "dubins/classification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dubins/angle.hpp"

namespace dubins {

double threshold_distance(double alpha, double beta) noexcept {
  const double cos_sum = std::cos(alpha) + std::cos(beta);
  double radicand = 4.0 - cos_sum * cos_sum;
  if (radicand < 0.0 && radicand > -1e-12) {
    radicand = 0.0;
  }
  return std::abs(std::sin(alpha)) + std::abs(std::sin(beta)) + std::sqrt(radicand);
}

std::string_view to_string(PathCase c) noexcept { return c == PathCase::Short ? "short" : "long"; }

PathCase case_of(const NormalizedProblem& p) noexcept {
  const double cos_sum = p.cos_alpha() + p.cos_beta();
  const double radicand = std::max(0.0, 4.0 - cos_sum * cos_sum);
  const double threshold =
      std::abs(p.sin_alpha()) + std::abs(p.sin_beta()) + std::sqrt(radicand);
  return p.d() < threshold - kThresholdGuard ? PathCase::Short : PathCase::Long;
}

int quadrant_of(double angle) noexcept {
  const double a = normalize_angle(angle);
  const int k = std::clamp(static_cast<int>(a / kHalfPi), 0, 3);
  return k + 1;
}

std::string ClassId::name() const {
  return "a" + std::to_string(initial) + std::to_string(final);
}

std::optional<ClassId> parse_class(std::string_view text) noexcept {
  if (text.size() != 3 || (text[0] != 'a' && text[0] != 'A')) {
    return std::nullopt;
  }
  const int i = text[1] - '0';
  const int j = text[2] - '0';
  if (i < 1 || i > 4 || j < 1 || j > 4) {
    return std::nullopt;
  }
  return ClassId{i, j};
}

ClassId class_of(const NormalizedProblem& p) noexcept {
  return {quadrant_of(p.alpha()), quadrant_of(p.beta())};
}

std::string_view to_string(GroupId g) noexcept {
  static constexpr std::array<std::string_view, 6> kNames{"E1", "E2", "E3", "E4", "E5", "E6"};
  return kNames[static_cast<std::size_t>(g) - 1];
}

GroupId group_of(ClassId c) noexcept {
  // Indexed [initial-1][final-1].
  static constexpr GroupId kTable[4][4] = {
      {GroupId::E1, GroupId::E2, GroupId::E3, GroupId::E4},
      {GroupId::E2, GroupId::E5, GroupId::E6, GroupId::E3},
      {GroupId::E3, GroupId::E6, GroupId::E5, GroupId::E2},
      {GroupId::E4, GroupId::E3, GroupId::E2, GroupId::E1},
  };
  return kTable[c.initial - 1][c.final - 1];
}

ClassId canonical_class(GroupId g) noexcept {
  switch (g) {
    case GroupId::E1:
      return {1, 1};
    case GroupId::E2:
      return {1, 2};
    case GroupId::E3:
      return {1, 3};
    case GroupId::E4:
      return {1, 4};
    case GroupId::E5:
      return {2, 2};
    case GroupId::E6:
      return {2, 3};
  }
  return {1, 1};
}

bool is_canonical(ClassId c) noexcept { return canonical_class(group_of(c)) == c; }

bool circles_intersect(const CircleCenter& a, const CircleCenter& b) noexcept {
  const double dx = a.center.x - b.center.x;
  const double dy = a.center.y - b.center.y;
  return dx * dx + dy * dy <= 4.0;
}

PathWord WordTransform::apply(PathWord w) const noexcept {
  if (reverse) {
    w = reverse_word(w);
  }
  if (flip_letters) {
    w = dubins::flip_letters(w);
  }
  return w;
}

DubinsPath WordTransform::apply(const DubinsPath& path) const noexcept {
  DubinsPath out = path;
  out.word = apply(path.word);
  if (reverse) {
    std::swap(out.t, out.q);
  }
  out.total = out.t + out.p + out.q;
  return out;
}

NormalizedProblem apply_equivalence(Equivalence e, const NormalizedProblem& p) noexcept {
  switch (e) {
    case Equivalence::Identity:
      return p;
    case Equivalence::Mirror:
      return p.mirrored();
    case Equivalence::Swap:
      return p.swapped();
    case Equivalence::MirrorSwap:
      return p.mirrored().swapped();
  }
  return p;
}

WordTransform word_transform(Equivalence e) noexcept {
  switch (e) {
    case Equivalence::Identity:
      return {false, false};
    case Equivalence::Mirror:
      return {true, false};
    case Equivalence::Swap:
      return {true, true};
    case Equivalence::MirrorSwap:
      return {false, true};
  }
  return {};
}

namespace {

constexpr std::array<Equivalence, 4> kEquivalences{Equivalence::Identity, Equivalence::Mirror,
                                                   Equivalence::Swap, Equivalence::MirrorSwap};

bool in_closed_quadrant(double angle, int k) noexcept {
  constexpr double kSlack = 1e-9;
  const double lo = (k - 1) * kHalfPi;
  const double hi = k * kHalfPi;
  if (angle >= lo - kSlack && angle <= hi + kSlack) {
    return true;
  }
  // 0 and 2π are the same heading.
  return k == 4 && angle <= kSlack;
}

}  // namespace

namespace {

// Quadrant index 0..3 of an angle that sits clearly inside its quadrant, else -1.
int interior_quadrant(double angle) noexcept {
  constexpr double kMargin = 1e-9;
  const double x = angle / kHalfPi;
  const double k = std::floor(x);
  const double frac = x - k;
  if (k < 0.0 || k > 3.0 || frac < kMargin || frac > 1.0 - kMargin) {
    return -1;
  }
  return static_cast<int>(k);
}

// First equivalence in kEquivalences order whose image is canonical, for interior points.
constexpr auto kInteriorEquivalence = [] {
  constexpr auto canonical = [](int i, int j) {
    return (i == 1 && j >= 1 && j <= 4) || (i == 2 && (j == 2 || j == 3));
  };
  std::array<std::array<Equivalence, 4>, 4> table{};
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      Equivalence pick = Equivalence::MirrorSwap;
      if (canonical(i, j)) {
        pick = Equivalence::Identity;
      } else if (canonical(5 - i, 5 - j)) {
        pick = Equivalence::Mirror;
      } else if (canonical(j, i)) {
        pick = Equivalence::Swap;
      }
      table[i - 1][j - 1] = pick;
    }
  }
  return table;
}();

}  // namespace

Canonicalized canonicalize(const NormalizedProblem& p) {
  const int qa = interior_quadrant(p.alpha());
  const int qb = interior_quadrant(p.beta());
  if (qa >= 0 && qb >= 0) {
    const Equivalence e = kInteriorEquivalence[qa][qb];
    NormalizedProblem image = apply_equivalence(e, p);
    return {class_of(image), image, word_transform(e), e};
  }
  for (const Equivalence e : kEquivalences) {
    NormalizedProblem image = apply_equivalence(e, p);
    const ClassId cls = class_of(image);
    if (is_canonical(cls)) {
      return {cls, image, word_transform(e), e};
    }
  }
  static constexpr std::array<ClassId, 6> kCanonical{
      ClassId{1, 1}, ClassId{1, 2}, ClassId{1, 3}, ClassId{1, 4}, ClassId{2, 2}, ClassId{2, 3}};
  for (const Equivalence e : kEquivalences) {
    NormalizedProblem image = apply_equivalence(e, p);
    for (const ClassId cls : kCanonical) {
      if (in_closed_quadrant(image.alpha(), cls.initial) &&
          in_closed_quadrant(image.beta(), cls.final)) {
        return {cls, image, word_transform(e), e};
      }
    }
  }
  throw std::logic_error("no canonical class for alpha/beta pair");
}

}  // namespace dubins
