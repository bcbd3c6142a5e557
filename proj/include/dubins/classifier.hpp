#pragma once

#include <cstdint>
#include <string_view>

#include "dubins/classification.hpp"
#include "dubins/geometry.hpp"
#include "dubins/oracle.hpp"
#include "dubins/words.hpp"

namespace dubins {

/// Switching functions of the per-class decision tables. The sign of each value compares two
/// candidate words; a positive value means the first-named word is longer.
///
///   S11_1 = S12_1 = S22_1 = 2(p_rlr - π) - p_rsr                        RLR vs RSR
///   S11_2 = S12_2         = 2(t_rlr + q_rlr) - (p_lsr + 2 q_lsr) + 2π   RLR vs LSR
///   S11_3 = S22_2         = 2(p_lrl - π) - p_lsl                        LRL vs LSL
///   S11_4 = S14_1         = 2(t_lrl + q_lrl) - (p_lsr + 2 t_lsr) + 2π   LRL vs LSR
///   S13_2 = S14_2         = 2(t_lrl + q_lrl) - (p_rsl + 2 q_rsl) + 2π   LRL vs RSL
///   S13_1 = S14_3         = α - β + π + p_rlr - p_lrl                   (RLR vs LRL) / 2
///   S44_k                 = S11_k with L and R exchanged
enum class SwitchId : std::uint8_t {
  S11_1, S11_2, S11_3, S11_4,
  S12_1, S12_2,
  S13_1, S13_2,
  S14_1, S14_2, S14_3,
  S22_1, S22_2,
  S44_1, S44_2, S44_3, S44_4,
};

std::string_view to_string(SwitchId id) noexcept;

/// Evaluates a switching function from memoized segments. Throws InfeasibleWordError if a
/// referenced word does not exist for `p`; the tables never ask in that situation.
double switching_value(SwitchId id, const NormalizedProblem& p, EvalCounter& counter);

/// Decision table of a canonical class. `p` must be a short-case problem whose angles lie in
/// the closed cell of `canonical`. Only the predicates on the taken branch are evaluated.
PathWord solve_class(ClassId canonical, const NormalizedProblem& p, EvalCounter& counter);

/// Table-driven solve for a short-case problem.
SolveResult solve_short(const NormalizedProblem& p, CountingMode mode = CountingMode::PerWord);

/// Short case -> solve_short, long case -> solve_exhaustive.
SolveResult solve_normalized(const NormalizedProblem& p,
                             CountingMode mode = CountingMode::PerWord);

/// Where P_i = (0,0) and P_f = (d,0) sit relative to the rhombus spanned by the two outer
/// circle centers of a CCC word and the two candidate middle-circle centers.
enum class RhombusSide : std::uint8_t { SameInside, SameOutside, Opposite };

std::string_view to_string(RhombusSide s) noexcept;

/// Side classification behind the CCC optimality condition. Throws std::domain_error when
/// the outer circles are more than 4 apart (no middle circle). Coincident outer centers give
/// a degenerate rhombus, reported as SameInside.
RhombusSide ccc_necessary_condition(const NormalizedProblem& p, PathWord ccc_word);

}  // namespace dubins
