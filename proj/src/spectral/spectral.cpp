#include "clausesearch/spectral.hpp"

#include <cmath>
#include <numbers>

#include "clausesearch/error.hpp"

namespace clausesearch {
namespace {

// cot(pi u / 2m); exactly 0 at u = m, where tan overflows to a finite
// value in floating point.
double half_angle_cot(int u, int m) {
  if (u == m) return 0.0;
  return 1.0 / std::tan(std::numbers::pi * u / (2.0 * m));
}

}  // namespace

double lambda2_from_histogram(std::span<const std::uint64_t> histogram, int n) {
  if (histogram.size() < 2) fail(ErrorKind::Usage, "histogram needs m >= 1");
  const int m = static_cast<int>(histogram.size()) - 1;
  double sum = 0.0;
  for (int u = 1; u <= m; ++u) {
    if (histogram[u] == 0) continue;
    const double c = half_angle_cot(u, m);
    sum += static_cast<double>(histogram[u]) * c * c;
  }
  return sum / std::ldexp(1.0, n);
}

double compute_lambda_p(const UnsatTable& table, int p) {
  table.require_unique_solution();
  const int m = table.m();
  const auto hist = table.histogram();
  if (p == 2) return lambda2_from_histogram(hist, table.n());
  if (p != 1) fail(ErrorKind::Usage, "compute_lambda_p supports p = 1 or 2");

  double sum = 0.0;
  for (int u = 1; u <= m; ++u) {
    // |1>|i> branch: eigenphase -pi u/m, and cot is odd.
    const double upper = static_cast<double>(hist[u]) * half_angle_cot(u, m);
    const double lower = static_cast<double>(hist[u]) * -half_angle_cot(u, m);
    sum += upper + lower;
  }
  return sum / std::ldexp(2.0, table.n());
}

SpectralSummary summarize(const UnsatTable& table) {
  SpectralSummary s;
  s.n = table.n();
  s.m = table.m();
  s.lambda1 = compute_lambda_p(table, 1);
  s.lambda2 = compute_lambda_p(table, 2);
  s.b = std::sqrt(1.0 + s.lambda2);
  const double sqrt_n = std::sqrt(std::ldexp(1.0, s.n));
  s.alpha = 1.0 / sqrt_n;
  s.lambda_pm = 2.0 / (s.b * sqrt_n);
  s.q_m = std::llround(std::numbers::pi * s.b * sqrt_n / 4.0);
  s.predicted_success = 1.0 / (s.b * s.b);
  s.validity_ratio = s.lambda_pm / (std::numbers::pi / s.m);
  s.validity_warning = s.validity_ratio > kValidityThreshold;
  s.histogram.assign(table.histogram().begin(), table.histogram().end());
  return s;
}

}  // namespace clausesearch
