// Command-line front end: solve, sample, bench, grid-check.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dubins/bench.hpp"
#include "dubins/classification.hpp"
#include "dubins/sampling.hpp"
#include "dubins/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

dubins::Configuration parse_pose(const std::string& text, const char* flag) {
  double values[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', pos);
    const bool last = i == 2;
    if (last != (comma == std::string::npos)) {
      throw UsageError(std::string(flag) + " expects x,y,theta");
    }
    const std::string field = text.substr(pos, last ? std::string::npos : comma - pos);
    char* end = nullptr;
    values[i] = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) {
      throw UsageError(std::string(flag) + ": '" + field + "' is not a number");
    }
    pos = comma + 1;
  }
  return {values[0], values[1], values[2]};
}

dubins::CountingMode parse_counting(const std::string& text) {
  return text == "segment" ? dubins::CountingMode::PerSegment : dubins::CountingMode::PerWord;
}

struct QueryFlags {
  std::string start;
  std::string goal;
  double radius{1.0};
  std::string counting{"word"};
};

void add_query_flags(CLI::App* cmd, QueryFlags& q) {
  cmd->add_option("--start", q.start, "start pose x,y,theta (radians)")->required();
  cmd->add_option("--goal", q.goal, "goal pose x,y,theta (radians)")->required();
  cmd->add_option("--radius", q.radius, "minimum turning radius")->default_val(1.0);
  cmd->add_option("--counting", q.counting, "segment-eval accounting")
      ->check(CLI::IsMember({"word", "segment"}))
      ->default_val("word");
}

dubins::Solution run_query(const QueryFlags& q) {
  return dubins::solve_query(parse_pose(q.start, "--start"), parse_pose(q.goal, "--goal"),
                             q.radius, parse_counting(q.counting));
}

int cmd_solve(const QueryFlags& q, const std::string& format) {
  const dubins::Solution s = run_query(q);
  const dubins::SolveResult& r = s.result;
  const dubins::DubinsPath world = r.world_path();
  const std::string cls = r.cls ? r.cls->name() : std::string();

  if (format == "csv") {
    std::cout << "word,t,p,q,total,case,class,evals,method\n"
              << to_string(world.word) << "," << fmt(world.t) << "," << fmt(world.p) << ","
              << fmt(world.q) << "," << fmt(world.total) << "," << to_string(r.path_case) << ","
              << cls << "," << r.evals << "," << to_string(r.method) << "\n";
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["word"] = to_string(world.word);
  j["t"] = round12(world.t);
  j["p"] = round12(world.p);
  j["q"] = round12(world.q);
  j["total"] = round12(world.total);
  j["case"] = to_string(r.path_case);
  j["class"] = r.cls ? nlohmann::ordered_json(cls) : nullptr;
  j["evals"] = r.evals;
  j["pattern_evals"] = r.pattern_evals;
  j["counting"] = to_string(r.counting);
  j["method"] = to_string(r.method);
  j["radius"] = round12(r.radius);
  j["normalized"] = {{"d", round12(s.problem.d())},
                     {"alpha", round12(s.problem.alpha())},
                     {"beta", round12(s.problem.beta())}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const QueryFlags& q, const std::string& format, double step, double tolerance) {
  if (!(step > 0.0)) {
    throw UsageError("--step must be positive");
  }
  const dubins::Solution s = run_query(q);
  const double normalized_step = step / q.radius;
  if (format == "svg") {
    auto pieces = dubins::sample_segments(s.result.path, s.problem, normalized_step, tolerance);
    for (auto& piece : pieces) {
      piece = dubins::to_world(piece, s.frame);
    }
    std::cout << dubins::to_svg(pieces, parse_pose(q.start, "--start"),
                                parse_pose(q.goal, "--goal"), q.radius);
    return kExitOk;
  }
  const auto line = dubins::sample_path(s.result.path, s.problem, normalized_step, tolerance);
  std::cout << dubins::to_csv(dubins::to_world(line, s.frame));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest Dubins paths with short-case decision tables"};
  app.require_subcommand(1);

  QueryFlags query;
  std::string solve_format = "json";
  auto* solve = app.add_subcommand("solve", "shortest path for one query");
  add_query_flags(solve, query);
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "csv"}));

  std::string sample_format = "csv";
  double step = 0.01;
  double tolerance = dubins::kEndpointTolerance;
  auto* sample = app.add_subcommand("sample", "polyline of the shortest path");
  add_query_flags(sample, query);
  sample->add_option("--format", sample_format)->check(CLI::IsMember({"csv", "svg"}));
  sample->add_option("--step", step, "arc length between samples (world units)");
  sample->add_option("--tolerance", tolerance, "endpoint tolerance (normalized units)");

  dubins::BenchOptions bench_opts;
  std::string bench_format = "json";
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "randomized classifier vs exhaustive comparison");
  bench->add_option("--n", bench_opts.n, "number of queries")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_flag("--short-only", bench_opts.short_only, "draw d from (0, d_t)");
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--tolerance", bench_opts.tolerance);
  bench->add_option("--rounds", bench_opts.timing_rounds, "timed repetitions per query block")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--no-timing", no_timing, "omit timing fields");

  dubins::GridOptions grid_opts;
  std::string grid_format = "json";
  std::string grid_class;
  auto* grid = app.add_subcommand("grid-check", "decision tables against the exhaustive oracle");
  grid->add_option("--alpha-steps", grid_opts.alpha_steps)->check(CLI::Range(2, 1 << 20));
  grid->add_option("--beta-steps", grid_opts.beta_steps)->check(CLI::Range(2, 1 << 20));
  grid->add_option("--d-steps", grid_opts.d_steps)->check(CLI::Range(2, 1 << 20));
  grid->add_option("--class", grid_class, "restrict to one class, e.g. a23");
  grid->add_option("--format", grid_format)->check(CLI::IsMember({"json", "csv"}));
  grid->add_option("--tolerance", grid_opts.tolerance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      return cmd_solve(query, solve_format);
    }
    if (*sample) {
      return cmd_sample(query, sample_format, step, tolerance);
    }
    if (*bench) {
      bench_opts.timing = !no_timing;
      const dubins::BenchReport report = dubins::run_bench(bench_opts);
      std::cout << (bench_format == "csv" ? dubins::to_csv(report, bench_opts.timing)
                                          : dubins::to_json(report, bench_opts.timing));
      return report.mismatches == 0 ? kExitOk : kExitMismatch;
    }
    if (*grid) {
      if (!grid_class.empty()) {
        grid_opts.only_class = dubins::parse_class(grid_class);
        if (!grid_opts.only_class) {
          throw UsageError("--class expects a name like a23");
        }
      }
      const dubins::GridReport report = dubins::run_grid_check(grid_opts);
      std::cout << (grid_format == "csv" ? dubins::to_csv(report) : dubins::to_json(report));
      return report.mismatches == 0 ? kExitOk : kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "dubins: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
