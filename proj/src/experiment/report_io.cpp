#include "clausesearch/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "clausesearch/version.hpp"

namespace clausesearch {
namespace {

// Shortest round-trip formatting, matching what the JSON writer emits.
std::string format_double(double x) {
  return Json(x).dump();
}

}  // namespace

Json to_json(const UnsatTable& table) {
  Json j;
  j["n"] = table.n();
  j["m"] = table.m();
  j["histogram"] = std::vector<std::uint64_t>(table.histogram().begin(),
                                              table.histogram().end());
  j["solutions"] = std::vector<Index>(table.solutions().begin(),
                                      table.solutions().end());
  return j;
}

Json to_json(const SpectralSummary& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["lambda1"] = s.lambda1;
  j["lambda2"] = s.lambda2;
  j["B"] = s.b;
  j["lambda_pm"] = s.lambda_pm;
  j["q_m"] = s.q_m;
  j["predicted_success"] = s.predicted_success;
  j["validity_ratio"] = s.validity_ratio;
  j["validity_warning"] = s.validity_warning;
  j["alpha"] = s.alpha;
  j["histogram"] = s.histogram;
  return j;
}

Json to_json(const EigenPairReport& r, bool include_all_phases) {
  Json j;
  j["lambda_plus"] = r.lambda_plus;
  j["lambda_minus"] = r.lambda_minus;
  j["overlap_plus"] = r.overlap_plus;
  j["overlap_minus"] = r.overlap_minus;
  j["span_weight"] = r.span_weight;
  j["max_modulus_error"] = r.max_modulus_error;
  j["dimension"] = r.eigenphases.size();
  if (include_all_phases) j["eigenphases"] = r.eigenphases;
  return j;
}

Json to_json(const RepeatStats& s) {
  Json j;
  j["q"] = s.q;
  j["trials"] = s.trials;
  j["p_success"] = s.p_success;
  j["empirical_success_rate"] = s.empirical_success_rate;
  j["mean_repeats"] = s.mean_repeats;
  return j;
}

Json to_json(const CostReport& c) {
  Json j;
  j["iterations_per_run"] = c.iterations_per_run;
  j["expected_total_iterations"] = c.expected_total_iterations;
  j["scaling_figure"] = c.scaling_figure;
  return j;
}

Json to_json(const RunReport& r) {
  Json j;
  j["version"] = kVersion;

  Json config;
  config["source"] = r.config.source;
  config["q_max"] = r.config.q_max.value_or(0);
  Json metrics = Json::array();
  if (r.config.record_marginal) metrics.push_back("marginal");
  if (r.config.record_overlap) metrics.push_back("overlap");
  config["metrics"] = metrics;
  config["compare_grover"] = r.config.compare_grover;
  if (r.config.compare_grover) config["grover_steps"] = r.config.grover_steps.value_or(0);
  j["config"] = config;

  j["solution"] = r.solution;
  j["spectral"] = to_json(r.spectral);

  Json curve;
  Json qs = Json::array();
  Json marginal = Json::array();
  Json overlap = Json::array();
  for (const CurvePoint& p : r.curve) {
    qs.push_back(p.q);
    marginal.push_back(p.p_marginal);
    overlap.push_back(p.p_overlap);
  }
  curve["q"] = qs;
  if (r.config.record_marginal) curve["p_marginal"] = marginal;
  if (r.config.record_overlap) curve["p_overlap"] = overlap;
  j["curve"] = curve;

  j["q_peak_measured"] = r.q_peak_measured;
  j["p_peak_measured"] = r.p_peak_measured;
  j["predicted"] = Json{{"q_m", r.predicted_q},
                        {"success", r.predicted_success}};

  if (r.config.compare_grover) {
    Json steps = Json::array();
    Json p_r = Json::array();
    for (const GroverPoint& p : r.grover_curve) {
      steps.push_back(p.step);
      p_r.push_back(p.p_r);
    }
    j["grover_curve"] = Json{{"step", steps}, {"p_r", p_r}};
  }
  j["cost"] = to_json(total_cost_report(r));

  if (r.config.include_timings) {
    j["wall_time_s"] = Json{{"enumerate", r.timings.enumerate_s},
                            {"spectral", r.timings.spectral_s},
                            {"sweep", r.timings.sweep_s},
                            {"grover", r.timings.grover_s}};
  }
  return j;
}

std::string curve_csv(const RunReport& r) {
  std::ostringstream out;
  out << 'q';
  if (r.config.record_marginal) out << ",p_marginal";
  if (r.config.record_overlap) out << ",p_overlap";
  out << '\n';
  for (const CurvePoint& p : r.curve) {
    out << p.q;
    if (r.config.record_marginal) out << ',' << format_double(p.p_marginal);
    if (r.config.record_overlap) out << ',' << format_double(p.p_overlap);
    out << '\n';
  }
  return out.str();
}

std::string grover_csv(const std::vector<GroverPoint>& curve) {
  std::ostringstream out;
  out << "step,p_r\n";
  for (const GroverPoint& p : curve) {
    out << p.step << ',' << format_double(p.p_r) << '\n';
  }
  return out.str();
}

Json snapshot_json(const StateVector& state, double threshold) {
  Json j;
  j["n"] = state.n();
  j["threshold"] = threshold;
  Json amps = Json::array();
  const auto a = state.amplitudes();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k]) >= threshold) {
      amps.push_back(Json::array({k, a[k].real(), a[k].imag()}));
    }
  }
  j["amplitudes"] = amps;
  return j;
}

}  // namespace clausesearch
