#include "dubins/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dubins/angle.hpp"

namespace dubins {

namespace {

using W = PathWord;
using S = SegmentIndex;

struct Segments {
  const NormalizedProblem& p;
  EvalCounter& counter;

  double t(W w) const { return counter.segment(w, S::First, p); }
  double m(W w) const { return counter.segment(w, S::Middle, p); }
  double q(W w) const { return counter.segment(w, S::Last, p); }
};

// 2(p_ccc - π) - p_csc: CCC against the CSC word sharing its outer circles.
double middle_switch(const Segments& s, W ccc, W csc) {
  return 2.0 * (s.m(ccc) - kPi) - s.m(csc);
}

// 2(t_ccc + q_ccc) - (p_csc + 2 x_csc) + 2π, with x the first or last CSC arc.
double outer_switch(const Segments& s, W ccc, W csc, SegmentIndex arc) {
  const double x = arc == S::First ? s.t(csc) : s.q(csc);
  return 2.0 * (s.t(ccc) + s.q(ccc)) - (s.m(csc) + 2.0 * x) + kTwoPi;
}

struct Intersections {
  const TurningCircles circles;

  bool il_fr() const noexcept {
    return circles_intersect(circle(circles, CircleTag::InitialLeft),
                             circle(circles, CircleTag::FinalRight));
  }
  bool ir_fl() const noexcept {
    return circles_intersect(circle(circles, CircleTag::InitialRight),
                             circle(circles, CircleTag::FinalLeft));
  }
};

double value(SwitchId id, const Segments& s) {
  const NormalizedProblem& p = s.p;
  switch (id) {
    case SwitchId::S11_1:
    case SwitchId::S12_1:
    case SwitchId::S22_1:
    case SwitchId::S44_3:
      return middle_switch(s, W::RLR, W::RSR);
    case SwitchId::S11_3:
    case SwitchId::S22_2:
    case SwitchId::S44_1:
      return middle_switch(s, W::LRL, W::LSL);
    case SwitchId::S11_2:
    case SwitchId::S12_2:
      return outer_switch(s, W::RLR, W::LSR, S::Last);
    case SwitchId::S11_4:
    case SwitchId::S14_1:
      return outer_switch(s, W::LRL, W::LSR, S::First);
    case SwitchId::S13_2:
    case SwitchId::S14_2:
    case SwitchId::S44_2:
      return outer_switch(s, W::LRL, W::RSL, S::Last);
    case SwitchId::S44_4:
      return outer_switch(s, W::RLR, W::RSL, S::First);
    case SwitchId::S13_1:
    case SwitchId::S14_3:
      return p.alpha() - p.beta() + kPi + s.m(W::RLR) - s.m(W::LRL);
  }
  throw std::invalid_argument("unknown switching function");
}

PathWord table_a11(const NormalizedProblem& p, const Segments& s, const Intersections& x) {
  if (!x.ir_fl()) {
    return W::RSL;
  }
  if (p.alpha() <= p.beta()) {
    const double t_rsr = s.t(W::RSR);
    if (t_rsr < kPi && value(SwitchId::S11_1, s) > 0.0) {
      return W::RSR;
    }
    if (t_rsr > kPi) {
      if (x.il_fr()) {
        return W::LRL;
      }
      if (value(SwitchId::S11_2, s) > 0.0) {
        return W::LSR;
      }
    }
    return W::RLR;
  }
  const double q_lsl = s.q(W::LSL);
  if (q_lsl < kPi && value(SwitchId::S11_3, s) > 0.0) {
    return W::LSL;
  }
  if (q_lsl > kPi) {
    if (x.il_fr()) {
      return W::RLR;
    }
    if (value(SwitchId::S11_4, s) > 0.0) {
      return W::LSR;
    }
  }
  return W::LRL;
}

PathWord table_a12(const Segments& s, const Intersections& x) {
  if (x.il_fr()) {
    return W::LRL;
  }
  if (s.t(W::RSR) < kPi) {
    return value(SwitchId::S12_1, s) < 0.0 ? W::RLR : W::RSR;
  }
  return value(SwitchId::S12_2, s) < 0.0 ? W::RLR : W::LSR;
}

PathWord table_a13(const Segments& s, const Intersections& x) {
  if (x.il_fr()) {
    if (x.ir_fl()) {
      return value(SwitchId::S13_1, s) < 0.0 ? W::RLR : W::LRL;
    }
    return value(SwitchId::S13_2, s) < 0.0 ? W::LRL : W::RSL;
  }
  return s.t(W::RSR) < kPi ? W::RSR : W::LSR;
}

PathWord table_a14(const Segments& s, const Intersections& x) {
  const bool il_fr = x.il_fr();
  const bool ir_fl = x.ir_fl();
  if (!il_fr && !ir_fl) {
    if (s.t(W::RSR) > kPi) {
      return W::LSR;
    }
    if (s.q(W::RSR) > kPi) {
      return W::RSL;
    }
    return W::RSR;
  }
  if (ir_fl && !il_fr) {
    return value(SwitchId::S14_1, s) < 0.0 ? W::LRL : W::LSR;
  }
  if (il_fr && !ir_fl) {
    return value(SwitchId::S14_2, s) < 0.0 ? W::LRL : W::RSL;
  }
  return value(SwitchId::S14_3, s) < 0.0 ? W::RLR : W::LRL;
}

PathWord table_a22(const NormalizedProblem& p, const Segments& s, const Intersections& x) {
  if (p.alpha() <= p.beta()) {
    if (s.t(W::RSR) > kPi) {
      return x.il_fr() ? W::LRL : W::LSR;
    }
    return value(SwitchId::S22_1, s) > 0.0 ? W::RSR : W::RLR;
  }
  if (s.q(W::LSL) > kPi) {
    return x.il_fr() ? W::RLR : W::LSR;
  }
  return value(SwitchId::S22_2, s) > 0.0 ? W::LSL : W::LRL;
}

PathWord table_a23(const Segments& s, const Intersections& x) {
  const bool il_fr = x.il_fr();
  const bool ir_fl = x.ir_fl();
  if (il_fr && ir_fl) {
    return W::LRL;
  }
  if (il_fr) {
    return s.q(W::RSR) < kPi ? W::RSR : W::RSL;
  }
  if (ir_fl) {
    return s.t(W::RSR) < kPi ? W::RSR : W::LSR;
  }
  return W::RSR;
}

// Side of `point` relative to the line a -> b: positive on the left.
double side(Vec2 a, Vec2 b, Vec2 point) noexcept {
  return (b.x - a.x) * (point.y - a.y) - (b.y - a.y) * (point.x - a.x);
}

// Closed point-in-quadrilateral test for a convex, consistently ordered polygon.
bool inside_convex(const std::array<Vec2, 4>& poly, Vec2 point) noexcept {
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double s = side(poly[i], poly[(i + 1) % poly.size()], point);
    has_pos = has_pos || s > 0.0;
    has_neg = has_neg || s < 0.0;
  }
  return !(has_pos && has_neg);
}

}  // namespace

std::string_view to_string(SwitchId id) noexcept {
  switch (id) {
    case SwitchId::S11_1: return "S11_1";
    case SwitchId::S11_2: return "S11_2";
    case SwitchId::S11_3: return "S11_3";
    case SwitchId::S11_4: return "S11_4";
    case SwitchId::S12_1: return "S12_1";
    case SwitchId::S12_2: return "S12_2";
    case SwitchId::S13_1: return "S13_1";
    case SwitchId::S13_2: return "S13_2";
    case SwitchId::S14_1: return "S14_1";
    case SwitchId::S14_2: return "S14_2";
    case SwitchId::S14_3: return "S14_3";
    case SwitchId::S22_1: return "S22_1";
    case SwitchId::S22_2: return "S22_2";
    case SwitchId::S44_1: return "S44_1";
    case SwitchId::S44_2: return "S44_2";
    case SwitchId::S44_3: return "S44_3";
    case SwitchId::S44_4: return "S44_4";
  }
  return "?";
}

double switching_value(SwitchId id, const NormalizedProblem& p, EvalCounter& counter) {
  return value(id, Segments{p, counter});
}

PathWord solve_class(ClassId canonical, const NormalizedProblem& p, EvalCounter& counter) {
  const Segments s{p, counter};
  const Intersections x{turning_centers(p)};
  if (canonical == ClassId{1, 1}) return table_a11(p, s, x);
  if (canonical == ClassId{1, 2}) return table_a12(s, x);
  if (canonical == ClassId{1, 3}) return table_a13(s, x);
  if (canonical == ClassId{1, 4}) return table_a14(s, x);
  if (canonical == ClassId{2, 2}) return table_a22(p, s, x);
  if (canonical == ClassId{2, 3}) return table_a23(s, x);
  throw std::invalid_argument("no decision table for class " + canonical.name());
}

SolveResult solve_short(const NormalizedProblem& p, CountingMode mode) {
  const Canonicalized c = canonicalize(p);
  EvalCounter counter(mode);
  const PathWord chosen = solve_class(c.canonical, c.problem, counter);
  const int pattern = counter.count();
  const auto& path = counter.word(chosen, c.problem);
  if (!path) {
    throw InfeasibleWordError(chosen);
  }

  SolveResult result;
  result.path = c.transform.apply(*path);
  result.path_case = PathCase::Short;
  result.cls = class_of(p);
  result.evals = counter.count();
  result.pattern_evals = pattern;
  result.method = Method::Classifier;
  result.counting = mode;
  return result;
}

SolveResult solve_normalized(const NormalizedProblem& p, CountingMode mode) {
  if (case_of(p) == PathCase::Short) {
    return solve_short(p, mode);
  }
  return solve_exhaustive(p, mode);
}

std::string_view to_string(RhombusSide s) noexcept {
  switch (s) {
    case RhombusSide::SameInside: return "same-inside";
    case RhombusSide::SameOutside: return "same-outside";
    case RhombusSide::Opposite: return "opposite";
  }
  return "?";
}

RhombusSide ccc_necessary_condition(const NormalizedProblem& p, PathWord ccc_word) {
  if (!is_ccc(ccc_word)) {
    throw std::invalid_argument("ccc_necessary_condition needs RLR or LRL");
  }
  const TurningCircles circles = turning_centers(p);
  const bool rlr = ccc_word == PathWord::RLR;
  const Vec2 a = circle(circles, rlr ? CircleTag::InitialRight : CircleTag::InitialLeft).center;
  const Vec2 b = circle(circles, rlr ? CircleTag::FinalRight : CircleTag::FinalLeft).center;

  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dist = std::hypot(dx, dy);
  if (dist > 4.0) {
    throw std::domain_error("CCC infeasible: outer circles more than 4 apart");
  }
  if (dist == 0.0) {
    return RhombusSide::SameInside;
  }

  const double h = std::sqrt(std::max(0.0, 4.0 - dist * dist / 4.0));
  const Vec2 mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  const Vec2 normal{-dy / dist, dx / dist};
  const std::array<Vec2, 4> rhombus{a, Vec2{mid.x + h * normal.x, mid.y + h * normal.y}, b,
                                    Vec2{mid.x - h * normal.x, mid.y - h * normal.y}};

  const bool start_in = inside_convex(rhombus, Vec2{0.0, 0.0});
  const bool goal_in = inside_convex(rhombus, Vec2{p.d(), 0.0});
  if (start_in != goal_in) {
    return RhombusSide::Opposite;
  }
  return start_in ? RhombusSide::SameInside : RhombusSide::SameOutside;
}

}  // namespace dubins
