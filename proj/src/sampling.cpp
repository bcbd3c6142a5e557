#include "dubins/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "dubins/angle.hpp"

namespace dubins {

namespace {

// Configuration after travelling `s` along the path, composed operator by operator.
Configuration point_at(const DubinsPath& path, const std::array<Motion, 3>& moves,
                       const Configuration& start, double s) {
  Configuration c = start;
  if (s <= 0.0) {
    return c;
  }
  const auto lengths = path.lengths();
  for (std::size_t i = 0; i < 3; ++i) {
    const double run = std::clamp(s, 0.0, lengths[i]);
    c = apply_operator(moves[i], run, c);
    s -= lengths[i];
    if (s <= 0.0) {
      break;
    }
  }
  return c;
}

Configuration checked_endpoint(const DubinsPath& path, const NormalizedProblem& p, double step,
                               double tolerance) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("sampling step must be positive");
  }
  const Configuration end = path_endpoint(path, p);
  const double position_error = std::hypot(end.x - p.d(), end.y);
  const double heading_error = std::fabs(angle_difference(end.theta, p.beta()));
  if (!(position_error <= tolerance) || !(heading_error <= tolerance)) {
    throw std::invalid_argument("path " + std::string(to_string(path.word)) +
                                " does not reach the goal configuration");
  }
  return end;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Polyline sample_path(const DubinsPath& path, const NormalizedProblem& p, double step,
                     double tolerance) {
  const Configuration end = checked_endpoint(path, p, step, tolerance);
  const auto moves = motions(path.word);
  const Configuration start = p.start();

  Polyline line;
  const double total = path.total;
  const auto whole = static_cast<std::size_t>(std::floor(total / step));
  line.reserve(whole + 2);
  for (std::size_t k = 0; k <= whole; ++k) {
    const double s = static_cast<double>(k) * step;
    if (s >= total - 1e-12 && k > 0) {
      break;
    }
    line.push_back(point_at(path, moves, start, s));
  }
  if (total > 0.0 || line.empty()) {
    line.push_back(end);
  }
  return line;
}

std::array<Polyline, 3> sample_segments(const DubinsPath& path, const NormalizedProblem& p,
                                        double step, double tolerance) {
  const Configuration end = checked_endpoint(path, p, step, tolerance);
  const auto moves = motions(path.word);
  const auto lengths = path.lengths();
  const Configuration start = p.start();

  std::array<Polyline, 3> pieces;
  double begin = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double finish = begin + lengths[i];
    Polyline& piece = pieces[i];
    piece.push_back(point_at(path, moves, start, begin));
    // Global sample positions strictly inside this segment.
    double s = (std::floor(begin / step) + 1.0) * step;
    for (; s < finish - 1e-12; s += step) {
      piece.push_back(point_at(path, moves, start, s));
    }
    piece.push_back(i == 2 ? end : point_at(path, moves, start, finish));
    begin = finish;
  }
  return pieces;
}

Polyline to_world(const Polyline& line, const FrameTransform& frame) {
  Polyline out;
  out.reserve(line.size());
  for (const Configuration& c : line) {
    out.push_back(frame.to_world(c));
  }
  return out;
}

double polyline_length(const Polyline& line) noexcept {
  double sum = 0.0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    sum += distance(line[i - 1].position(), line[i].position());
  }
  return sum;
}

std::string to_csv(const Polyline& line) {
  std::string out = "x,y,theta\n";
  for (const Configuration& c : line) {
    out += fmt(c.x) + "," + fmt(c.y) + "," + fmt(c.theta) + "\n";
  }
  return out;
}

std::string to_svg(const std::array<Polyline, 3>& segments, const Configuration& start,
                   const Configuration& goal, double radius) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Polyline& piece : segments) {
    for (const Configuration& c : piece) {
      min_x = std::min(min_x, c.x);
      max_x = std::max(max_x, c.x);
      min_y = std::min(min_y, c.y);
      max_y = std::max(max_y, c.y);
    }
  }
  const double margin = radius;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  const double stroke = std::max(width, height) / 300.0;

  // SVG y grows downward; flip about the bounding box.
  auto px = [&](double x) { return fmt(x - min_x); };
  auto py = [&](double y) { return fmt(max_y - y); };

  static constexpr std::array<const char*, 3> kColors{"#1f77b4", "#d62728", "#2ca02c"};
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(width) +
                    " " + fmt(height) + "\">\n";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    out += "<path fill=\"none\" stroke=\"" + std::string(kColors[i]) + "\" stroke-width=\"" +
           fmt(stroke) + "\" d=\"";
    const Polyline& piece = segments[i];
    for (std::size_t k = 0; k < piece.size(); ++k) {
      out += (k == 0 ? "M " : " L ") + px(piece[k].x) + " " + py(piece[k].y);
    }
    out += "\"/>\n";
  }
  const double arrow = radius * 0.5;
  for (const Configuration* c : {&start, &goal}) {
    const char* color = c == &start ? "#000000" : "#7f7f7f";
    out += "<circle cx=\"" + px(c->x) + "\" cy=\"" + py(c->y) + "\" r=\"" + fmt(stroke * 3.0) +
           "\" fill=\"" + color + "\"/>\n";
    out += "<line x1=\"" + px(c->x) + "\" y1=\"" + py(c->y) + "\" x2=\"" +
           px(c->x + arrow * std::cos(c->theta)) + "\" y2=\"" +
           py(c->y + arrow * std::sin(c->theta)) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dubins
