#include "clausesearch/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "clausesearch/error.hpp"
#include "clausesearch/parallel.hpp"
#include "clausesearch/rng.hpp"
#include "clausesearch/state_vector.hpp"

namespace clausesearch {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::int64_t kMaxRepeatsPerTrial = 100'000'000;

}  // namespace

RunReport run_sweep(const UnsatTable& table, const RunConfig& config) {
  RunReport report;
  report.config = config;
  report.solution = table.require_unique_solution();

  auto start = Clock::now();
  report.spectral = summarize(table);
  report.timings.spectral_s = seconds_since(start);
  report.predicted_q = report.spectral.q_m;
  report.predicted_success = report.spectral.predicted_success;

  const std::int64_t q_max = config.q_max.value_or(2 * report.spectral.q_m);
  if (q_max < 1) fail(ErrorKind::Usage, "q_max must be >= 1");
  report.config.q_max = q_max;

  const unsigned threads = resolve_threads(config.threads);
  start = Clock::now();
  const PhaseProfile profile(table);
  StateVector state = StateVector::uniform(table.n(), table.n());
  report.curve.reserve(static_cast<std::size_t>(q_max) + 1);
  for (std::int64_t q = 0;; ++q) {
    const Measurement meas = measure(state, report.solution);
    report.curve.push_back({q, meas.p_marginal, meas.p_overlap});
    if (meas.p_overlap > report.p_peak_measured) {
      report.p_peak_measured = meas.p_overlap;
      report.q_peak_measured = q;
    }
    if (q == q_max) break;
    apply_a(state, profile, threads);
  }
  report.timings.sweep_s = seconds_since(start);

  if (config.compare_grover) {
    start = Clock::now();
    const std::int64_t steps =
        config.grover_steps.value_or(grover_optimal_steps(table.n()));
    report.config.grover_steps = steps;
    report.grover_curve = run_grover_baseline(table.n(), report.solution, steps,
                                              table.n());
    report.timings.grover_s = seconds_since(start);
  }
  return report;
}

RunReport run_sweep(const CnfFormula& f, const RunConfig& config, int guard_n) {
  const auto start = Clock::now();
  const UnsatTable table =
      build_unsat_table(f, guard_n, resolve_threads(config.threads));
  const double enumerate_s = seconds_since(start);
  RunReport report = run_sweep(table, config);
  report.timings.enumerate_s = enumerate_s;
  return report;
}

std::int64_t grover_optimal_steps(int n) {
  return static_cast<std::int64_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, n))));
}

std::vector<GroverPoint> run_grover_baseline(int n, Index r, std::int64_t steps,
                                             int guard_n) {
  if (n < 1 || n > guard_n) {
    fail(ErrorKind::Guard, "grover baseline n = " + std::to_string(n) +
                               " outside [1, " + std::to_string(guard_n) + "]");
  }
  if (steps < 0) fail(ErrorKind::Usage, "grover steps must be >= 0");
  const Index size = Index{1} << n;
  if (r >= size) fail(ErrorKind::Usage, "solution index out of range");

  std::vector<Complex> data(size, Complex{1.0 / std::sqrt(static_cast<double>(size)), 0.0});
  std::vector<GroverPoint> curve;
  curve.reserve(static_cast<std::size_t>(steps) + 1);
  curve.push_back({0, std::norm(data[r])});
  for (std::int64_t k = 1; k <= steps; ++k) {
    grover_step(data, r);
    curve.push_back({k, std::norm(data[r])});
  }
  return curve;
}

RepeatStats repeat_until_success_stats(const UnsatTable& table,
                                       const RunConfig& config,
                                       std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorKind::Usage, "trials must be >= 1");
  const Index r = table.require_unique_solution();
  const SpectralSummary summary = summarize(table);

  const unsigned threads = resolve_threads(config.threads);
  const PhaseProfile profile(table);
  StateVector state = StateVector::uniform(table.n(), table.n());
  for (std::int64_t q = 0; q < summary.q_m; ++q) apply_a(state, profile, threads);

  // Cumulative distribution over the 2N outcomes, normalized by its total.
  const std::vector<double> probs = probabilities(state);
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  const double total = cdf.back();
  const Index half = state.data_size();

  Rng rng(seed);
  auto sample_hits = [&] {
    const double x = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    if (it == cdf.end()) --it;
    const auto k = static_cast<Index>(it - cdf.begin());
    return (k % half) == r;
  };

  RepeatStats stats;
  stats.q = summary.q_m;
  stats.trials = trials;
  stats.p_success = measure(state, r).p_marginal;
  std::int64_t hits = 0;
  double repeats_total = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    if (sample_hits()) ++hits;
    std::int64_t runs = 1;
    while (!sample_hits() && runs < kMaxRepeatsPerTrial) ++runs;
    repeats_total += static_cast<double>(runs);
  }
  stats.empirical_success_rate = static_cast<double>(hits) / static_cast<double>(trials);
  stats.mean_repeats = repeats_total / static_cast<double>(trials);
  return stats;
}

CostReport total_cost_report(const RunReport& report) {
  CostReport cost;
  cost.iterations_per_run = report.predicted_q;
  cost.expected_total_iterations =
      report.p_peak_measured > 0.0
          ? static_cast<double>(report.predicted_q) / report.p_peak_measured
          : std::numeric_limits<double>::infinity();
  const double b = report.spectral.b;
  cost.scaling_figure = std::numbers::pi * b * b * b *
                        std::sqrt(std::ldexp(1.0, report.spectral.n)) / 4.0;
  return cost;
}

}  // namespace clausesearch
