#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "clausesearch/cnf.hpp"
#include "clausesearch/unsat_table.hpp"

namespace clausesearch {

using Complex = std::complex<double>;

/// Amplitudes over ancilla (x) data register, 2N = 2^(n+1) entries.
/// Amplitude of |b>|i> lives at b*N + i, so each ancilla branch is a
/// contiguous block of N entries.
class StateVector {
 public:
  /// |+>_{n+1}: every amplitude 1/sqrt(2N).
  static StateVector uniform(int n, int guard_n = kDefaultGuardN);
  /// Computational basis state |b>|i>.
  static StateVector basis(int n, int b, Index i, int guard_n = kDefaultGuardN);
  /// Adopts `amplitudes` (length must be a power of two >= 4).
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int n() const { return n_; }
  Index data_size() const { return Index{1} << n_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<Complex> amplitudes() { return amplitudes_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  Complex& at(int b, Index i) { return amplitudes_[b * data_size() + i]; }
  const Complex& at(int b, Index i) const {
    return amplitudes_[b * data_size() + i];
  }

  double norm_squared() const;

 private:
  StateVector(int n, std::vector<Complex> amplitudes)
      : n_(n), amplitudes_(std::move(amplitudes)) {}

  int n_;
  std::vector<Complex> amplitudes_;
};

/// Diagonal of the clause-phase operator D: |0>|i> picks up exp(i pi u_i/m),
/// |1>|i> the conjugate. One phase is tabulated per distinct u, so the two
/// branches are exact conjugates of each other.
class PhaseProfile {
 public:
  explicit PhaseProfile(const UnsatTable& table);

  int n() const { return n_; }
  int m() const { return m_; }
  std::span<const std::uint32_t> counts() const { return counts_; }

  /// Phase applied to |0>|i>.
  Complex phase(Index i) const { return by_count_[counts_[i]]; }

  /// Same data register, every phase conjugated (the inverse of D).
  PhaseProfile conjugated() const;

 private:
  int n_;
  int m_;
  std::vector<std::uint32_t> counts_;
  std::vector<Complex> by_count_;
};

/// Fixed reduction block, in amplitudes. Global sums are formed per block
/// and the block partials combined by a pairwise tree, so results depend on
/// the block size only, never on the thread count.
inline constexpr std::size_t kReductionBlock = 1024;

/// Deterministic sum of all amplitudes (fixed reduction shape).
Complex amplitude_sum(std::span<const Complex> amplitudes, unsigned threads = 1);

/// Multiplies each amplitude by its diagonal phase from `profile`.
void apply_d(StateVector& state, const PhaseProfile& profile, unsigned threads = 1);

/// Applies the per-clause operators D_j one after another, in `order`
/// (clause indices; empty means 0..m-1). Each D_j evaluates its clause
/// literal by literal; this path does not use UnsatTable and serves as the
/// independent check on apply_d.
void apply_d_product(StateVector& state, const CnfFormula& f,
                     std::span<const std::size_t> order = {});

/// Selective inversion of |+>_{n+1}: psi -> psi - 2 <+|psi> |+>.
void apply_reflection_plus(StateVector& state, unsigned threads = 1);

/// One iterate: apply_d followed by apply_reflection_plus, fused into a
/// phase-and-sum pass and a shift pass.
void apply_a(StateVector& state, const PhaseProfile& profile, unsigned threads = 1);

struct Measurement {
  double p_marginal;  // sum_b |psi(b, r)|^2
  double p_overlap;   // |<+, r|psi>|^2
};

Measurement measure(const StateVector& state, Index solution);

/// |psi_k|^2 for every k in the 2N layout.
std::vector<double> probabilities(const StateVector& state);

/// Grover iterate on an N-dimensional data register: negate amplitude `r`,
/// then apply W I_0 W = 1 - 2|s><s| with |s> uniform.
void grover_step(std::span<Complex> data_state, Index r);

}  // namespace clausesearch
