#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clausesearch/unsat_table.hpp"

namespace clausesearch {

/// Above this |lambda|/(pi/m) the two-eigenstate picture (N >> m^2) is
/// considered violated and SpectralSummary::validity_warning is set.
inline constexpr double kValidityThreshold = 0.1;

struct SpectralSummary {
  int n = 0;
  int m = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double b = 1.0;               // sqrt(1 + lambda2)
  double lambda_pm = 0.0;       // 2 / (B sqrt(N)), magnitude of the eigenphase pair
  std::int64_t q_m = 0;         // round(pi B sqrt(N) / 4)
  double predicted_success = 1.0;  // 1 / B^2
  double validity_ratio = 0.0;  // lambda_pm / (pi / m)
  bool validity_warning = false;
  double alpha = 0.0;           // 1 / sqrt(N)
  std::vector<std::uint64_t> histogram;
};

/// (1/N) sum_{u=1..m} N_u cot^2(pi u / 2m). Needs no solution structure, so
/// it also applies to random formulas with several (or no) solutions.
double lambda2_from_histogram(std::span<const std::uint64_t> histogram, int n);

/// Lambda_p for p in {1, 2}; the table must have exactly one solution.
///
/// p = 2 uses the histogram form. p = 1 sums, for each u, the |0>|i> branch
/// term cot(pi u / 2m) against the |1>|i> branch term cot(-pi u / 2m); the
/// two are exact negatives in floating point, so the result is exactly 0.
double compute_lambda_p(const UnsatTable& table, int p);

SpectralSummary summarize(const UnsatTable& table);

struct EigenPairReport {
  std::vector<double> eigenphases;  // arg of every eigenvalue of A
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double overlap_plus = 0.0;   // |<lambda_+|+, r>|^2
  double overlap_minus = 0.0;  // |<lambda_-|+, r>|^2
  double span_weight = 0.0;    // overlap_plus + overlap_minus
  double max_modulus_error = 0.0;  // max_k ||w_k| - 1|
};

/// Largest n accepted by dense_eigencheck (A is 2^(n+1) square).
inline constexpr int kDenseGuardN = 10;

/// Materializes A column by column (apply_a on each basis vector), runs
/// LAPACK zgeev, and extracts the principal pair: the positive and the
/// negative eigenphase of smallest magnitude among eigenvectors with
/// |<v|+, r>|^2 > 1e-6.
EigenPairReport dense_eigencheck(const UnsatTable& table,
                                 int guard_n = kDenseGuardN);

}  // namespace clausesearch
