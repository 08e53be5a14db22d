// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clausesearch/experiment.hpp"
#include "clausesearch/generator.hpp"
#include "clausesearch/report_io.hpp"
#include "clausesearch/rng.hpp"
#include "clausesearch/spectral.hpp"
#include "clausesearch/state_vector.hpp"

using namespace clausesearch;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FIRST FAILURE: " << what << "; ";
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> body;
};

// ---------------------------------------------------------------------------

void lambda1_identity(Outcome& out) {
  Rng rng(2026);
  double worst_branch_sum = 0.0;
  double worst_lambda2_gap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 8 + static_cast<int>(rng.below(9));
    const int m = 8 + static_cast<int>(rng.below(41));
    const PlantedInstance p = generate_planted_3sat(n, m, rng.next());
    const UnsatTable t = build_unsat_table(p.formula);
    const double lambda1 = compute_lambda_p(t, 1);
    out.require(lambda1 == 0.0, "compute_lambda_p(., 1) not exactly 0");

    // Explicit sum over every eigenstate |b>|i != r> of D with weight 1/2N.
    const double weight = 1.0 / std::ldexp(2.0, n);
    double branch_sum = 0.0;
    double square_sum = 0.0;
    for (int b = 0; b <= 1; ++b) {
      for (Index i = 0; i < t.size(); ++i) {
        if (i == p.planted) continue;
        const double theta =
            (b == 0 ? 1.0 : -1.0) * std::numbers::pi * t.counts()[i] / t.m();
        const double c = 1.0 / std::tan(theta / 2.0);
        branch_sum += weight * c;
        square_sum += weight * c * c;
      }
    }
    worst_branch_sum = std::max(worst_branch_sum, std::abs(branch_sum - lambda1));
    worst_lambda2_gap =
        std::max(worst_lambda2_gap, std::abs(square_sum - compute_lambda_p(t, 2)));
  }
  out.require(worst_branch_sum <= 1e-10, "two-branch sum differs by > 1e-10");
  out.require(worst_lambda2_gap <= 1e-10, "Lambda_2 routes differ by > 1e-10");
  out.detail << "100 instances; max |two-branch sum| = " << worst_branch_sum
             << ", max Lambda_2 route gap = " << worst_lambda2_gap;
}

void d_equivalence(Outcome& out) {
  Rng rng(77);
  double worst = 0.0;
  double worst_order = 0.0;
  for (int f_idx = 0; f_idx < 20; ++f_idx) {
    const int n = 3 + static_cast<int>(rng.below(6));  // 3..8
    const int m = 1 + static_cast<int>(rng.below(40));
    const CnfFormula f = generate_random_3sat(n, m, rng.next());
    const PhaseProfile profile(build_unsat_table(f));

    std::vector<std::size_t> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    for (int s = 0; s < 100; ++s) {
      std::vector<Complex> amps(std::size_t{2} << n);
      double norm = 0.0;
      for (Complex& a : amps) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
      }
      for (Complex& a : amps) a /= std::sqrt(norm);
      const StateVector start = StateVector::from_amplitudes(amps);

      StateVector diag = start;
      StateVector product = start;
      apply_d(diag, profile);
      apply_d_product(product, f);

      // Fisher-Yates permutation of the factor order.
      for (std::size_t k = order.size(); k > 1; --k) {
        std::swap(order[k - 1], order[rng.below(k)]);
      }
      StateVector permuted = start;
      apply_d_product(permuted, f, order);

      for (std::size_t k = 0; k < start.size(); ++k) {
        worst = std::max(worst, std::abs(diag.amplitudes()[k] - product.amplitudes()[k]));
        worst_order = std::max(
            worst_order, std::abs(permuted.amplitudes()[k] - product.amplitudes()[k]));
      }
    }
  }
  out.require(worst <= 1e-10, "diagonal vs product path > 1e-10");
  out.require(worst_order <= 1e-12, "factor permutation changed result > 1e-12");
  out.detail << "20 formulas x 100 states; max |D - prod D_j| = " << worst
             << ", max permutation gap = " << worst_order;
}

void eigenphase_prediction(Outcome& out) {
  int accepted = 0;
  double worst_rel = 0.0;
  double worst_anti = 0.0;
  double min_span = 1.0;
  std::uint64_t seed = 1;
  for (; accepted < 20 && seed <= 400; ++seed) {
    const PlantedInstance p = generate_planted_3sat(10, 3, seed);
    const UnsatTable t = build_unsat_table(p.formula);
    const SpectralSummary s = summarize(t);
    if (s.validity_ratio > 0.05) continue;
    ++accepted;
    const EigenPairReport e = dense_eigencheck(t);
    const double rel = std::max(std::abs(e.lambda_plus - s.lambda_pm),
                                std::abs(-e.lambda_minus - s.lambda_pm)) / s.lambda_pm;
    worst_rel = std::max(worst_rel, rel);
    worst_anti = std::max(worst_anti, std::abs(e.lambda_plus + e.lambda_minus));
    min_span = std::min(min_span, e.span_weight);
  }
  out.require(accepted == 20, "fewer than 20 instances with validity ratio <= 0.05");
  out.require(worst_rel <= 0.05, "eigenphase off 2/(B sqrt N) by > 5%");
  out.require(worst_anti <= 1e-6, "pair not antisymmetric within 1e-6");
  out.require(min_span >= 0.95, "span weight below 0.95");
  out.detail << accepted << " instances (seeds scanned: " << seed - 1
             << "); max rel err = " << worst_rel << ", max |l+ + l-| = " << worst_anti
             << ", min span weight = " << min_span;
}

void peak_success(Outcome& out) {
  struct Plan {
    int n;
    int m;
    int count;
  };
  const Plan plans[] = {{14, 20, 4}, {16, 40, 3}, {18, 60, 3}};
  int accepted = 0;
  double worst_height = 0.0;
  double worst_position = 0.0;  // |q_peak - q_m| / allowed
  for (const Plan& plan : plans) {
    int taken = 0;
    for (std::uint64_t seed = 1; taken < plan.count && seed <= 50; ++seed) {
      const PlantedInstance p = generate_planted_3sat(plan.n, plan.m, seed);
      const UnsatTable t = build_unsat_table(p.formula);
      if (summarize(t).validity_ratio > 0.05) continue;
      ++taken;
      ++accepted;
      const RunReport r = run_sweep(t, RunConfig{});
      const double target = r.predicted_success;
      const double at_qm = r.curve.at(static_cast<std::size_t>(r.predicted_q)).p_overlap;
      const double height = std::abs(at_qm - target) / target;
      const double allowed = std::max(2.0, 0.1 * static_cast<double>(r.predicted_q));
      const double position =
          std::abs(static_cast<double>(r.q_peak_measured - r.predicted_q)) / allowed;
      worst_height = std::max(worst_height, height);
      worst_position = std::max(worst_position, position);
      std::printf("    n=%d m=%d seed=%llu B=%.4f q_m=%lld q_peak=%lld p(q_m)*B^2=%.4f\n",
                  plan.n, r.spectral.m, static_cast<unsigned long long>(seed),
                  r.spectral.b, static_cast<long long>(r.predicted_q),
                  static_cast<long long>(r.q_peak_measured), at_qm / target);
      std::fflush(stdout);
    }
  }
  out.require(accepted == 10, "fewer than 10 instances in the validity regime");
  out.require(worst_height <= 0.25, "p_overlap(q_m) off 1/B^2 by > 25%");
  out.require(worst_position <= 1.0, "peak outside +-max(2, 0.1 q_m)");
  out.detail << accepted << " instances; max rel height err = " << worst_height
             << ", max peak offset / allowance = " << worst_position;
}

void grover_like_limit(Outcome& out) {
  const int n = 12;
  const Index r = 1234;
  double worst_gap = 0.0;
  double min_peak = 1.0;
  for (int m : {1, 7}) {
    std::vector<std::uint32_t> counts(std::size_t{1} << n, static_cast<std::uint32_t>(m));
    counts[r] = 0;
    const UnsatTable t = UnsatTable::from_counts(n, m, std::move(counts));
    RunConfig config;
    config.compare_grover = true;
    const SpectralSummary s = summarize(t);
    config.grover_steps = 2 * s.q_m;
    const RunReport rep = run_sweep(t, config);
    out.require(s.lambda2 == 0.0 && s.b == 1.0, "Lambda_2 != 0 for maximal family");
    out.require(s.q_m == std::llround(std::numbers::pi * 64.0 / 4.0), "q_m != round(pi sqrt N / 4)");
    const double peak = rep.curve.at(static_cast<std::size_t>(s.q_m)).p_overlap;
    min_peak = std::min(min_peak, peak);
    for (std::size_t k = 0; k < rep.curve.size(); ++k) {
      worst_gap = std::max(worst_gap, std::abs(rep.curve[k].p_overlap - rep.grover_curve[k].p_r));
    }
  }
  out.require(min_peak >= 0.95, "p_overlap(q_m) < 0.95");
  out.require(worst_gap <= 1e-6, "curve differs from Grover baseline by > 1e-6");
  out.detail << "n=12, m in {1,7}; q_m = 50; min p_overlap(q_m) = " << min_peak
             << ", max |curve - grover| = " << worst_gap;
}

void grover_baseline(Outcome& out) {
  double worst = 0.0;
  for (int n = 1; n <= 16; ++n) {
    const Index size = Index{1} << n;
    const Index r = (size * 2) / 3;
    const std::int64_t steps = 2 * grover_optimal_steps(n) + 1;
    const double theta = 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(size)));
    for (const GroverPoint& g : run_grover_baseline(n, r, steps)) {
      const double s = std::sin((2.0 * static_cast<double>(g.step) + 1.0) * theta / 2.0);
      worst = std::max(worst, std::abs(g.p_r - s * s));
    }
  }
  const double four = run_grover_baseline(2, 3, 1).back().p_r;
  out.require(worst <= 1e-10, "closed form mismatch > 1e-10");
  out.require(std::abs(four - 1.0) <= 1e-12, "N=4 single step not exact");
  out.detail << "n = 1..16; max |p_r - sin^2((2k+1)theta/2)| = " << worst
             << "; N=4 step 1: |p_r - 1| = " << std::abs(four - 1.0);
}

void three_sat_b_scale(Outcome& out) {
  std::vector<double> bs;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const UnsatTable t = build_unsat_table(generate_random_3sat(18, 40, seed));
    bs.push_back(std::sqrt(1.0 + lambda2_from_histogram(t.histogram(), 18)));
  }
  const double mean = std::accumulate(bs.begin(), bs.end(), 0.0) / static_cast<double>(bs.size());
  const auto [lo, hi] = std::minmax_element(bs.begin(), bs.end());
  out.require(bs[0] >= 3.0 && bs[0] <= 8.0, "B of the seed-1 instance outside [3, 8]");
  out.require(mean >= 3.0 && mean <= 8.0, "ensemble mean B outside [3, 8]");
  out.detail << "n=18 m=40: B(seed 1) = " << bs[0] << "; 10-seed mean = " << mean
             << " (range " << *lo << " .. " << *hi << "); cot(pi/16) = "
             << 1.0 / std::tan(std::numbers::pi / 16);
}

void unitarity_and_determinism(Outcome& out) {
  const PlantedInstance p = generate_planted_3sat(10, 3, 1);
  const UnsatTable t = build_unsat_table(p.formula);
  const PhaseProfile profile(t);
  StateVector s = StateVector::uniform(10);
  double drift = 0.0;
  for (int k = 0; k < 10000; ++k) {
    apply_a(s, profile);
    drift = std::max(drift, std::abs(s.norm_squared() - 1.0));
  }
  out.require(drift <= 1e-10, "norm drift > 1e-10");

  const PlantedInstance big = generate_planted_3sat(13, 30, 9);
  std::set<std::string> documents;
  for (unsigned threads : {1U, 2U, 4U, 1U}) {
    RunConfig config;
    config.source = "acceptance";
    config.compare_grover = true;
    config.threads = threads;
    documents.insert(to_json(run_sweep(big.formula, config)).dump());
  }
  out.require(documents.size() == 1, "JSON reports differ across runs/thread counts");
  out.detail << "max norm drift over 1e4 iterates = " << drift
             << "; distinct JSON documents over threads {1,2,4,1} = " << documents.size();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "lambda1-cancellation", lambda1_identity},
      {2, "diagonal-vs-product-D", d_equivalence},
      {3, "principal-eigenphase-pair", eigenphase_prediction},
      {4, "peak-success-probability", peak_success},
      {5, "maximal-unsat-grover-limit", grover_like_limit},
      {6, "grover-baseline-closed-form", grover_baseline},
      {7, "random-3sat-B-scale", three_sat_b_scale},
      {8, "unitarity-and-determinism", unitarity_and_determinism},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%d] %-30s %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
