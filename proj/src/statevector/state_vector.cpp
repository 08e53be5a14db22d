#include "clausesearch/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "clausesearch/error.hpp"
#include "clausesearch/parallel.hpp"

namespace clausesearch {
namespace {

void check_register(int n, int guard_n) {
  if (n < 1) fail(ErrorKind::Usage, "state vector needs n >= 1");
  if (n > guard_n) {
    fail(ErrorKind::Guard, "n = " + std::to_string(n) +
                               " exceeds the state-vector guard of " +
                               std::to_string(guard_n));
  }
}

std::size_t block_count(std::size_t size) {
  return (size + kReductionBlock - 1) / kReductionBlock;
}

// Applies the diagonal to block `blk` and returns the sum of the updated
// amplitudes in index order.
Complex phase_block(std::span<Complex> amps, const PhaseProfile& profile,
                    std::size_t blk) {
  const Index half = profile.counts().size();
  const std::size_t lo = blk * kReductionBlock;
  const std::size_t hi = std::min(amps.size(), lo + kReductionBlock);
  Complex sum{0.0, 0.0};
  for (std::size_t k = lo; k < std::min<std::size_t>(hi, half); ++k) {
    amps[k] *= profile.phase(k);
    sum += amps[k];
  }
  for (std::size_t k = std::max<std::size_t>(lo, half); k < hi; ++k) {
    amps[k] *= std::conj(profile.phase(k - half));
    sum += amps[k];
  }
  return sum;
}

Complex block_sum(std::span<const Complex> amps, std::size_t blk) {
  const std::size_t lo = blk * kReductionBlock;
  const std::size_t hi = std::min(amps.size(), lo + kReductionBlock);
  Complex sum{0.0, 0.0};
  for (std::size_t k = lo; k < hi; ++k) sum += amps[k];
  return sum;
}

void subtract_constant(std::span<Complex> amps, Complex shift, unsigned threads) {
  parallel_chunks(amps.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) amps[k] -= shift;
  });
}

void check_profile(const StateVector& state, const PhaseProfile& profile) {
  if (profile.n() != state.n()) {
    fail(ErrorKind::Usage, "phase profile built for n = " +
                               std::to_string(profile.n()) +
                               ", state has n = " + std::to_string(state.n()));
  }
}

}  // namespace

StateVector StateVector::uniform(int n, int guard_n) {
  check_register(n, guard_n);
  const std::size_t size = std::size_t{2} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  return StateVector(n, std::vector<Complex>(size, Complex{amp, 0.0}));
}

StateVector StateVector::basis(int n, int b, Index i, int guard_n) {
  check_register(n, guard_n);
  if ((b != 0 && b != 1) || i >= (Index{1} << n)) {
    fail(ErrorKind::Usage, "basis label out of range");
  }
  StateVector state(n, std::vector<Complex>(std::size_t{2} << n));
  state.at(b, i) = 1.0;
  return state;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 4 || (size & (size - 1)) != 0) {
    fail(ErrorKind::Usage, "amplitude count must be a power of two >= 4");
  }
  const int n = std::countr_zero(size) - 1;
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const {
  std::vector<double> partials(block_count(size()));
  for (std::size_t blk = 0; blk < partials.size(); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(size(), lo + kReductionBlock);
    double s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += std::norm(amplitudes_[k]);
    partials[blk] = s;
  }
  return pairwise_sum(partials.data(), partials.size());
}

PhaseProfile::PhaseProfile(const UnsatTable& table)
    : n_(table.n()),
      m_(table.m()),
      counts_(table.counts().begin(), table.counts().end()),
      by_count_(static_cast<std::size_t>(table.m()) + 1) {
  for (int u = 0; u <= m_; ++u) {
    by_count_[u] = std::polar(1.0, std::numbers::pi * u / m_);
  }
}

PhaseProfile PhaseProfile::conjugated() const {
  PhaseProfile out = *this;
  for (Complex& c : out.by_count_) c = std::conj(c);
  return out;
}

Complex amplitude_sum(std::span<const Complex> amplitudes, unsigned threads) {
  std::vector<Complex> partials(block_count(amplitudes.size()));
  parallel_chunks(partials.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t blk = lo; blk < hi; ++blk) {
      partials[blk] = block_sum(amplitudes, blk);
    }
  });
  return pairwise_sum(partials.data(), partials.size());
}

void apply_d(StateVector& state, const PhaseProfile& profile, unsigned threads) {
  check_profile(state, profile);
  const Index half = state.data_size();
  auto amps = state.amplitudes();
  parallel_chunks(half, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Complex ph = profile.phase(i);
      amps[i] *= ph;
      amps[half + i] *= std::conj(ph);
    }
  });
}

void apply_d_product(StateVector& state, const CnfFormula& f,
                     std::span<const std::size_t> order) {
  if (f.num_variables() != state.n()) {
    fail(ErrorKind::Usage, "formula and state disagree on n");
  }
  std::vector<std::size_t> sequence(order.begin(), order.end());
  if (sequence.empty()) {
    for (std::size_t j = 0; j < f.clauses().size(); ++j) sequence.push_back(j);
  }
  const Complex rotation = std::polar(1.0, std::numbers::pi / f.num_clauses());
  const Index half = state.data_size();
  for (std::size_t j : sequence) {
    const Clause& clause = f.clauses().at(j);
    for (Index i = 0; i < half; ++i) {
      if (eval_clause(clause, i)) continue;
      state.at(0, i) *= rotation;
      state.at(1, i) *= std::conj(rotation);
    }
  }
}

void apply_reflection_plus(StateVector& state, unsigned threads) {
  auto amps = state.amplitudes();
  const Complex sum = amplitude_sum(amps, threads);
  subtract_constant(amps, sum / static_cast<double>(state.data_size()), threads);
}

void apply_a(StateVector& state, const PhaseProfile& profile, unsigned threads) {
  check_profile(state, profile);
  auto amps = state.amplitudes();
  std::vector<Complex> partials(block_count(amps.size()));
  parallel_chunks(partials.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t blk = lo; blk < hi; ++blk) {
      partials[blk] = phase_block(amps, profile, blk);
    }
  });
  const Complex sum = pairwise_sum(partials.data(), partials.size());
  subtract_constant(amps, sum / static_cast<double>(state.data_size()), threads);
}

Measurement measure(const StateVector& state, Index solution) {
  if (solution >= state.data_size()) {
    fail(ErrorKind::Usage, "solution index out of range");
  }
  const Complex a0 = state.at(0, solution);
  const Complex a1 = state.at(1, solution);
  return Measurement{std::norm(a0) + std::norm(a1), std::norm(a0 + a1) / 2.0};
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> out;
  out.reserve(state.size());
  for (const Complex& a : state.amplitudes()) out.push_back(std::norm(a));
  return out;
}

}  // namespace clausesearch
