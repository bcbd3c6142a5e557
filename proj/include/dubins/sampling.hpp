#pragma once

#include <array>
#include <string>
#include <vector>

#include "dubins/geometry.hpp"
#include "dubins/words.hpp"

namespace dubins {

using Polyline = std::vector<Configuration>;

inline constexpr double kEndpointTolerance = 1e-9;

/// Vertices every `step` of arc length from (0, 0, alpha), closed by the exact endpoint.
/// Throws std::invalid_argument for step <= 0 or when the path misses (d, 0, beta) by more
/// than `tolerance`.
Polyline sample_path(const DubinsPath& path, const NormalizedProblem& p, double step,
                     double tolerance = kEndpointTolerance);

/// The same vertices split per segment; each piece starts and ends on a segment boundary.
std::array<Polyline, 3> sample_segments(const DubinsPath& path, const NormalizedProblem& p,
                                        double step, double tolerance = kEndpointTolerance);

Polyline to_world(const Polyline& line, const FrameTransform& frame);

/// Sum of Euclidean distances between consecutive vertices.
double polyline_length(const Polyline& line) noexcept;

std::string to_csv(const Polyline& line);

/// One <path> per segment plus start and goal markers, y axis pointing up.
std::string to_svg(const std::array<Polyline, 3>& segments, const Configuration& start,
                   const Configuration& goal, double radius);

}  // namespace dubins
