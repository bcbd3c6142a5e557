#include "dubins/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <span>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "dubins/angle.hpp"
#include "dubins/classifier.hpp"
#include "dubins/oracle.hpp"

namespace dubins {

namespace {

using Clock = std::chrono::steady_clock;

// Uniform on [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1).
double open_unit(std::mt19937_64& rng) {
  double u = 0.0;
  while (u == 0.0) {
    u = unit(rng);
  }
  return u;
}

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

template <typename Solver>
double time_block(std::span<const NormalizedProblem> block, Solver&& solver) {
  volatile double sink = 0.0;
  const auto begin = Clock::now();
  for (const NormalizedProblem& p : block) {
    sink = sink + solver(p);
  }
  const auto end = Clock::now();
  return std::chrono::duration<double, std::nano>(end - begin).count();
}

constexpr std::size_t kTimingBlock = 4096;

std::vector<double> sweep_angles(int steps) {
  std::set<double> angles{0.0, kHalfPi, kPi, 3.0 * kHalfPi};
  for (int i = 0; i < steps; ++i) {
    angles.insert(normalize_angle(kTwoPi * i / steps));
  }
  return {angles.begin(), angles.end()};
}

}  // namespace

NormalizedProblem make_query(std::uint64_t seed, std::uint64_t index, bool short_only) {
  // Distinct (seed, index) pairs give distinct engine seeds for any index below 2^64 / kMix.
  constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ULL;
  std::mt19937_64 rng(seed * kMix + index);
  for (;;) {
    const double alpha = kTwoPi * unit(rng);
    const double beta = kTwoPi * unit(rng);
    if (!short_only) {
      return {kMixedMaxDistance * open_unit(rng), alpha, beta};
    }
    const double dt = threshold_distance(alpha, beta);
    const NormalizedProblem p{dt * open_unit(rng), alpha, beta};
    if (case_of(p) == PathCase::Short) {
      return p;
    }
  }
}

BenchReport run_bench(const BenchOptions& options) {
  if (options.n == 0) {
    throw std::invalid_argument("bench needs at least one query");
  }
  std::vector<NormalizedProblem> problems;
  problems.reserve(options.n);
  for (std::uint64_t i = 0; i < options.n; ++i) {
    problems.push_back(make_query(options.seed, i, options.short_only));
  }

  BenchReport report;
  report.n_queries = options.n;
  std::uint64_t shorts = 0;
  double sum_evals = 0.0;
  double sum_pattern = 0.0;
  double sum_word = 0.0;
  for (const NormalizedProblem& p : problems) {
    if (!options.accounting) {
      shorts += case_of(p) == PathCase::Short ? 1 : 0;
      continue;
    }
    const SolveResult fast = solve_normalized(p, CountingMode::PerSegment);
    const SolveResult by_word = solve_normalized(p, CountingMode::PerWord);
    const SolveResult oracle = solve_exhaustive(p);
    if (fast.path_case == PathCase::Short) {
      ++shorts;
    }
    sum_evals += fast.evals;
    sum_pattern += fast.pattern_evals;
    sum_word += by_word.evals;
    report.max_evals_classifier = std::max(report.max_evals_classifier, fast.evals);
    report.max_pattern_evals = std::max(report.max_pattern_evals, fast.pattern_evals);
    report.max_word_evals = std::max(report.max_word_evals, by_word.evals);
    if (fast.path_case == PathCase::Short && group_of(class_of(p)) == GroupId::E6) {
      report.min_pattern_evals_e6 =
          std::min(report.min_pattern_evals_e6.value_or(fast.pattern_evals), fast.pattern_evals);
      report.min_evals_e6 = std::min(report.min_evals_e6.value_or(fast.evals), fast.evals);
    }
    const double excess = fast.path.total - oracle.path.total;
    if (excess > options.tolerance) {
      ++report.mismatches;
    }
    report.max_excess = std::max(report.max_excess, excess);
  }
  const auto n = static_cast<double>(options.n);
  report.short_fraction = static_cast<double>(shorts) / n;
  report.mean_evals_classifier = sum_evals / n;
  report.mean_pattern_evals = sum_pattern / n;
  report.mean_word_evals = sum_word / n;

  if (options.timing) {
    const auto fast = [](const NormalizedProblem& p) { return solve_normalized(p).path.total; };
    const auto oracle = [](const NormalizedProblem& p) { return solve_exhaustive(p).path.total; };
    const int rounds = std::max(1, options.timing_rounds);
    double total_fast = 0.0;
    double total_oracle = 0.0;
    const std::span<const NormalizedProblem> all(problems);
    for (std::size_t first = 0; first < all.size(); first += kTimingBlock) {
      const auto block = all.subspan(first, std::min(kTimingBlock, all.size() - first));
      double best_fast = std::numeric_limits<double>::infinity();
      double best_oracle = std::numeric_limits<double>::infinity();
      for (int round = 0; round < rounds; ++round) {
        best_fast = std::min(best_fast, time_block(block, fast));
        best_oracle = std::min(best_oracle, time_block(block, oracle));
      }
      total_fast += best_fast;
      total_oracle += best_oracle;
    }
    report.mean_time_classifier_ns = total_fast / n;
    report.mean_time_exhaustive_ns = total_oracle / n;
    report.speedup = total_fast > 0.0 ? total_oracle / total_fast : 0.0;
  }
  return report;
}

std::string to_json(const BenchReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["n_queries"] = report.n_queries;
  j["short_fraction"] = round12(report.short_fraction);
  j["mean_evals_classifier"] = round12(report.mean_evals_classifier);
  j["max_evals_classifier"] = report.max_evals_classifier;
  j["mean_pattern_evals"] = round12(report.mean_pattern_evals);
  j["max_pattern_evals"] = report.max_pattern_evals;
  j["mean_word_evals"] = round12(report.mean_word_evals);
  j["max_word_evals"] = report.max_word_evals;
  j["min_evals_e6"] = report.min_evals_e6 ? nlohmann::ordered_json(*report.min_evals_e6) : nullptr;
  j["min_pattern_evals_e6"] =
      report.min_pattern_evals_e6 ? nlohmann::ordered_json(*report.min_pattern_evals_e6) : nullptr;
  if (include_timing) {
    j["mean_time_classifier_ns"] = round12(report.mean_time_classifier_ns);
    j["mean_time_exhaustive_ns"] = round12(report.mean_time_exhaustive_ns);
    j["speedup"] = round12(report.speedup);
  }
  j["mismatches"] = report.mismatches;
  j["max_excess"] = round12(report.max_excess);
  return j.dump(2) + "\n";
}

std::string to_csv(const BenchReport& report, bool include_timing) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string header =
      "n_queries,short_fraction,mean_evals_classifier,max_evals_classifier,mean_pattern_evals,"
      "max_pattern_evals,mean_word_evals,max_word_evals,min_evals_e6,min_pattern_evals_e6";
  std::string row = std::to_string(report.n_queries) + "," + fmt(report.short_fraction) + "," +
                    fmt(report.mean_evals_classifier) + "," +
                    std::to_string(report.max_evals_classifier) + "," +
                    fmt(report.mean_pattern_evals) + "," +
                    std::to_string(report.max_pattern_evals) + "," + fmt(report.mean_word_evals) +
                    "," + std::to_string(report.max_word_evals) + "," + opt(report.min_evals_e6) +
                    "," + opt(report.min_pattern_evals_e6);
  if (include_timing) {
    header += ",mean_time_classifier_ns,mean_time_exhaustive_ns,speedup";
    row += "," + fmt(report.mean_time_classifier_ns) + "," + fmt(report.mean_time_exhaustive_ns) +
           "," + fmt(report.speedup);
  }
  header += ",mismatches,max_excess\n";
  row += "," + std::to_string(report.mismatches) + "," + fmt(report.max_excess) + "\n";
  return header + row;
}

GridReport run_grid_check(const GridOptions& options) {
  if (options.alpha_steps < 2 || options.beta_steps < 2 || options.d_steps < 2) {
    throw std::invalid_argument("grid step counts must be at least 2");
  }
  constexpr std::size_t kMaxExamples = 10;
  GridReport report;
  const std::vector<double> alphas = sweep_angles(options.alpha_steps);
  const std::vector<double> betas = sweep_angles(options.beta_steps);

  for (const double alpha : alphas) {
    for (const double beta : betas) {
      const double dt = threshold_distance(alpha, beta);
      if (dt <= 0.0) {
        continue;
      }
      std::vector<double> distances;
      for (int k = 1; k <= options.d_steps; ++k) {
        distances.push_back(dt * k / (options.d_steps + 1));
      }
      distances.push_back(0.999 * dt);

      for (const double d : distances) {
        const NormalizedProblem p{d, alpha, beta};
        const ClassId cls = class_of(p);
        if (options.only_class && !(*options.only_class == cls)) {
          continue;
        }
        if (case_of(p) != PathCase::Short) {
          continue;
        }
        const SolveResult oracle = solve_exhaustive(p);
        std::string word;
        double total = 0.0;
        try {
          const SolveResult fast = solve_short(p);
          word = std::string(to_string(fast.path.word));
          total = fast.path.total;
        } catch (const std::exception& e) {
          word = std::string("error: ") + e.what();
          total = std::numeric_limits<double>::infinity();
        }
        GridCell& cell = report.per_class[cls.name()];
        ++cell.queries;
        ++report.queries;
        const double excess = total - oracle.path.total;
        report.max_excess = std::max(report.max_excess, excess);
        if (excess > options.tolerance) {
          ++cell.mismatches;
          ++report.mismatches;
          if (report.examples.size() < kMaxExamples) {
            report.examples.push_back({alpha, beta, d, word, total, oracle.path.total});
          }
        }
      }
    }
  }
  return report;
}

std::string to_json(const GridReport& report) {
  nlohmann::ordered_json j;
  j["queries"] = report.queries;
  j["mismatches"] = report.mismatches;
  j["max_excess"] = round12(report.max_excess);
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (const auto& [name, cell] : report.per_class) {
    classes[name] = {{"group", to_string(group_of(*parse_class(name)))},
                     {"queries", cell.queries},
                     {"mismatches", cell.mismatches}};
  }
  j["per_class"] = classes;
  nlohmann::ordered_json examples = nlohmann::ordered_json::array();
  for (const GridMismatch& m : report.examples) {
    examples.push_back({{"alpha", round12(m.alpha)},
                        {"beta", round12(m.beta)},
                        {"d", round12(m.d)},
                        {"word", m.word},
                        {"classifier_total", round12(m.classifier_total)},
                        {"exhaustive_total", round12(m.exhaustive_total)}});
  }
  j["examples"] = examples;
  return j.dump(2) + "\n";
}

std::string to_csv(const GridReport& report) {
  std::string out = "class,group,queries,mismatches\n";
  for (const auto& [name, cell] : report.per_class) {
    out += name + "," + std::string(to_string(group_of(*parse_class(name)))) + "," +
           std::to_string(cell.queries) + "," + std::to_string(cell.mismatches) + "\n";
  }
  return out;
}

}  // namespace dubins
