#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dubins/geometry.hpp"
#include "dubins/words.hpp"

namespace dubins {

/// Distance below which the initial and final turning-circle pairs overlap:
/// |sin α| + |sin β| + sqrt(4 - (cos α + cos β)^2). Never exceeds 4.
double threshold_distance(double alpha, double beta) noexcept;

enum class PathCase : std::uint8_t { Short, Long };

std::string_view to_string(PathCase c) noexcept;

/// Short iff d lies strictly below the threshold. Thresholds within 1e-12 of d count as long,
/// which keeps rounding noise in sin(π) from inventing a short case at α = β = π.
PathCase case_of(const NormalizedProblem& p) noexcept;

inline constexpr double kThresholdGuard = 1e-12;

/// Quadrant k in 1..4 for an angle in [(k-1)π/2, kπ/2). The angle is normalized first.
int quadrant_of(double angle) noexcept;

/// Quadrant-pair class a_ij.
struct ClassId {
  int initial{1};
  int final{1};

  friend constexpr bool operator==(ClassId, ClassId) = default;
  [[nodiscard]] std::string name() const;  // "a13"
};

std::optional<ClassId> parse_class(std::string_view text) noexcept;

ClassId class_of(const NormalizedProblem& p) noexcept;

enum class GroupId : std::uint8_t { E1 = 1, E2, E3, E4, E5, E6 };

std::string_view to_string(GroupId g) noexcept;

GroupId group_of(ClassId c) noexcept;

/// The representative class of each group whose decision table is implemented:
/// a11, a12, a13, a14, a22, a23.
bool is_canonical(ClassId c) noexcept;
ClassId canonical_class(GroupId g) noexcept;

/// Unit circles meet (tangency included) iff their centers are at most 2 apart.
bool circles_intersect(const CircleCenter& a, const CircleCenter& b) noexcept;

/// Word-level image of an equivalence between problems.
///
///   (2π-α, 2π-β)  <->  flip_letters
///   (β, α)        <->  flip_letters + reverse
///   (2π-β, 2π-α)  <->  reverse
///
/// reverse also swaps the first and last segment lengths. Composition is XOR of the flags.
struct WordTransform {
  bool flip_letters{false};
  bool reverse{false};

  friend constexpr bool operator==(WordTransform, WordTransform) = default;

  [[nodiscard]] WordTransform then(WordTransform next) const noexcept {
    return {flip_letters != next.flip_letters, reverse != next.reverse};
  }
  [[nodiscard]] bool is_identity() const noexcept { return !flip_letters && !reverse; }

  [[nodiscard]] PathWord apply(PathWord w) const noexcept;
  [[nodiscard]] DubinsPath apply(const DubinsPath& path) const noexcept;
};

/// Problem-level equivalence operations, in terms of which WordTransform is defined.
enum class Equivalence : std::uint8_t { Identity, Mirror, Swap, MirrorSwap };

NormalizedProblem apply_equivalence(Equivalence e, const NormalizedProblem& p) noexcept;
WordTransform word_transform(Equivalence e) noexcept;

struct Canonicalized {
  ClassId canonical;
  NormalizedProblem problem;
  /// Maps words of `problem` back to words of the original problem (an involution).
  WordTransform transform;
  Equivalence equivalence;
};

/// Picks the first equivalence (identity, mirror, swap, mirror+swap) that lands in a canonical
/// class. Points on quadrant boundaries that have no canonical image under half-open
/// quadrants are assigned to a canonical class whose closed cell contains them.
Canonicalized canonicalize(const NormalizedProblem& p);

}  // namespace dubins
