#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dubins/geometry.hpp"

namespace dubins {

/// The six Dubins words. Declaration order is the canonical tie-breaking order.
enum class PathWord : std::uint8_t { LSL, RSR, LSR, RSL, RLR, LRL };

inline constexpr std::array<PathWord, 6> kAllWords{PathWord::LSL, PathWord::RSR, PathWord::LSR,
                                                   PathWord::RSL, PathWord::RLR, PathWord::LRL};

std::string_view to_string(PathWord w) noexcept;
std::optional<PathWord> parse_word(std::string_view text) noexcept;

std::array<Motion, 3> motions(PathWord w) noexcept;
bool is_ccc(PathWord w) noexcept;
/// L <-> R, e.g. LSR -> RSL.
PathWord flip_letters(PathWord w) noexcept;
/// Reads the word backwards, e.g. LSR -> RSL, RLR -> RLR.
PathWord reverse_word(PathWord w) noexcept;

enum class SegmentIndex : std::uint8_t { First, Middle, Last };

struct DubinsPath {
  PathWord word{PathWord::LSL};
  double t{0.0};
  double p{0.0};
  double q{0.0};
  double total{0.0};

  static DubinsPath make(PathWord word, double t, double p, double q) noexcept {
    return {word, t, p, q, t + p + q};
  }

  [[nodiscard]] double segment(SegmentIndex s) const noexcept {
    switch (s) {
      case SegmentIndex::First:
        return t;
      case SegmentIndex::Middle:
        return p;
      case SegmentIndex::Last:
        return q;
    }
    return t;
  }
  [[nodiscard]] std::array<double, 3> lengths() const noexcept { return {t, p, q}; }
};

/// Composes the three motion operators of `path` starting from (0, 0, alpha).
Configuration path_endpoint(const DubinsPath& path, const NormalizedProblem& p);

/// Closed-form segments of one word, uncounted. Empty when the word does not exist for `p`.
///
/// t and q are in [0, 2π); p is a length for CSC words and an angle in [0, 2π) for CCC words.
/// The CCC middle arc is the major arc (p = 2π - arccos(...)).
std::optional<DubinsPath> compute_segments(PathWord w, const NormalizedProblem& p) noexcept;

/// The middle segment of compute_segments(w, p), bit for bit, without the arc headings.
std::optional<double> compute_middle(PathWord w, const NormalizedProblem& p) noexcept;

/// How EvalCounter charges segment computations.
///   PerWord    - 3 the first time a word is touched (exhaustive search costs 18).
///   PerSegment - one per distinct segment length, including the segments it is derived from
///                (t and q of LSR/RSL need p; t of a CCC word needs p, q needs t and p).
enum class CountingMode : std::uint8_t { PerWord, PerSegment };

std::string_view to_string(CountingMode m) noexcept;

class InfeasibleWordError : public std::logic_error {
 public:
  explicit InfeasibleWordError(PathWord w);
  [[nodiscard]] PathWord word() const noexcept { return word_; }

 private:
  PathWord word_;
};

/// Memoizing segment source for a single solve. Not shared between problems.
class EvalCounter {
 public:
  static constexpr int kMaxCount = 18;

  explicit EvalCounter(CountingMode mode = CountingMode::PerWord) noexcept : mode_(mode) {}

  [[nodiscard]] CountingMode mode() const noexcept { return mode_; }
  [[nodiscard]] int count() const noexcept { return count_; }
  [[nodiscard]] bool touched(PathWord w) const noexcept { return charged_[index(w)] != 0; }

  /// All three segments of `w`; charges whatever has not been charged yet.
  const std::optional<DubinsPath>& word(PathWord w, const NormalizedProblem& p);

  /// One segment of `w`. Throws InfeasibleWordError when `w` does not exist for `p`.
  double segment(PathWord w, SegmentIndex s, const NormalizedProblem& p);

 private:
  static std::size_t index(PathWord w) noexcept { return static_cast<std::size_t>(w); }
  const std::optional<DubinsPath>& ensure(PathWord w, const NormalizedProblem& p);
  void charge(PathWord w, std::uint8_t mask) noexcept;

  CountingMode mode_;
  int count_{0};
  std::array<bool, 6> computed_{};
  std::array<std::uint8_t, 6> charged_{};
  std::array<std::optional<DubinsPath>, 6> memo_{};
  std::array<bool, 6> middle_computed_{};
  std::array<std::optional<double>, 6> middle_memo_{};
};

std::optional<DubinsPath> word_segments(PathWord w, const NormalizedProblem& p, EvalCounter& counter);
std::optional<double> word_length(PathWord w, const NormalizedProblem& p, EvalCounter& counter);

}  // namespace dubins
