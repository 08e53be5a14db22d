#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <cmath>
#include <limits>
#include <string>

#include "clausesearch/error.hpp"
#include "clausesearch/spectral.hpp"
#include "clausesearch/state_vector.hpp"

namespace clausesearch {
namespace {

constexpr double kMinOverlap = 1e-6;
constexpr double kZeroPhase = 1e-9;
constexpr double kModulusTolerance = 1e-8;

}  // namespace

EigenPairReport dense_eigencheck(const UnsatTable& table, int guard_n) {
  if (table.n() > guard_n) {
    fail(ErrorKind::Guard, "dense eigencheck limited to n <= " +
                               std::to_string(guard_n) + ", got n = " +
                               std::to_string(table.n()));
  }
  const Index r = table.require_unique_solution();
  const PhaseProfile profile(table);
  const auto dim = static_cast<lapack_int>(std::size_t{2} << table.n());
  const auto udim = static_cast<std::size_t>(dim);

  // Column-major; column k is A e_k.
  std::vector<Complex> matrix(udim * udim);
  for (std::size_t k = 0; k < udim; ++k) {
    StateVector column = StateVector::basis(table.n(), k < udim / 2 ? 0 : 1,
                                            k % (udim / 2), table.n());
    apply_a(column, profile);
    std::copy(column.amplitudes().begin(), column.amplitudes().end(),
              matrix.begin() + static_cast<std::ptrdiff_t>(k * udim));
  }

  std::vector<Complex> eigenvalues(udim);
  std::vector<Complex> vectors(udim * udim);
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', dim, matrix.data(), dim,
                    eigenvalues.data(), nullptr, 1, vectors.data(), dim);
  if (info != 0) {
    throw std::runtime_error("zgeev failed with info = " + std::to_string(info));
  }

  EigenPairReport report;
  report.eigenphases.reserve(udim);
  for (const Complex& w : eigenvalues) {
    report.eigenphases.push_back(std::arg(w));
    report.max_modulus_error =
        std::max(report.max_modulus_error, std::abs(std::abs(w) - 1.0));
  }
  if (report.max_modulus_error > kModulusTolerance) {
    throw std::runtime_error("iterate spectrum is not unit-modulus");
  }

  // <v|+, r> = (v(0, r) + v(1, r))^* / sqrt(2); zgeev vectors have unit norm.
  const std::size_t half = udim / 2;
  double best_pos = std::numeric_limits<double>::infinity();
  double best_neg = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < udim; ++k) {
    const double phase = report.eigenphases[k];
    if (std::abs(phase) <= kZeroPhase) continue;
    const Complex* v = vectors.data() + k * udim;
    const double overlap = std::norm(v[r] + v[half + r]) / 2.0;
    if (overlap <= kMinOverlap) continue;
    if (phase > 0 && phase < best_pos) {
      best_pos = phase;
      report.overlap_plus = overlap;
    } else if (phase < 0 && phase > best_neg) {
      best_neg = phase;
      report.overlap_minus = overlap;
    }
  }
  if (!std::isfinite(best_pos) || !std::isfinite(best_neg)) {
    throw std::runtime_error("no principal eigenphase pair overlaps |+, r>");
  }
  report.lambda_plus = best_pos;
  report.lambda_minus = best_neg;
  report.span_weight = report.overlap_plus + report.overlap_minus;
  return report;
}

}  // namespace clausesearch
