#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clausesearch/cnf.hpp"
#include "clausesearch/spectral.hpp"
#include "clausesearch/unsat_table.hpp"

namespace clausesearch {

struct RunConfig {
  std::string source;                       // echoed into reports
  std::optional<std::int64_t> q_max;        // default 2 * q_m
  bool record_marginal = true;
  bool record_overlap = true;
  bool compare_grover = false;
  std::optional<std::int64_t> grover_steps;  // default floor(pi/4 sqrt(N))
  unsigned threads = 1;
  bool include_timings = false;             // wall times break byte-identity
};

struct CurvePoint {
  std::int64_t q;
  double p_marginal;
  double p_overlap;
};

struct GroverPoint {
  std::int64_t step;
  double p_r;
};

struct PhaseTimings {
  double enumerate_s = 0.0;
  double spectral_s = 0.0;
  double sweep_s = 0.0;
  double grover_s = 0.0;
};

struct RunReport {
  RunConfig config;
  Index solution = 0;
  SpectralSummary spectral;
  std::vector<CurvePoint> curve;  // q = 0 .. q_max
  std::int64_t q_peak_measured = 0;   // first argmax of p_overlap
  double p_peak_measured = 0.0;
  std::int64_t predicted_q = 0;       // q_m
  double predicted_success = 0.0;     // 1 / B^2
  std::vector<GroverPoint> grover_curve;
  PhaseTimings timings;
};

/// Iterates A from |+>_{n+1} and records both success metrics after every
/// iteration count 0..q_max. The table must have a unique solution.
RunReport run_sweep(const UnsatTable& table, const RunConfig& config);
RunReport run_sweep(const CnfFormula& f, const RunConfig& config,
                    int guard_n = kDefaultGuardN);

/// floor(pi/4 sqrt(2^n)).
std::int64_t grover_optimal_steps(int n);

/// |amplitude_r|^2 of the plain Grover iteration for steps 0..steps.
std::vector<GroverPoint> run_grover_baseline(int n, Index r, std::int64_t steps,
                                             int guard_n = kDefaultGuardN);

struct RepeatStats {
  std::int64_t q = 0;
  std::int64_t trials = 0;
  double p_success = 0.0;              // exact marginal probability of r at q
  double empirical_success_rate = 0.0;  // fraction of single runs that hit r
  double mean_repeats = 0.0;           // mean runs until the first hit
};

/// Samples measurements of A^{q_m}|+>_{n+1} from its full 2N distribution.
/// Each trial draws one run for the success rate, then keeps drawing runs
/// until r appears to count repeats.
RepeatStats repeat_until_success_stats(const UnsatTable& table,
                                       const RunConfig& config,
                                       std::int64_t trials, std::uint64_t seed);

struct CostReport {
  std::int64_t iterations_per_run = 0;
  double expected_total_iterations = 0.0;  // q_m / p_peak_measured
  double scaling_figure = 0.0;             // pi B^3 sqrt(N) / 4
};

CostReport total_cost_report(const RunReport& report);

}  // namespace clausesearch
