#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clausesearch/cnf.hpp"

namespace clausesearch {

/// Upper bound on n for anything that enumerates or stores all 2^n
/// assignments. Overridable per call (CLI: --guard-n).
inline constexpr int kDefaultGuardN = 30;

/// Per-assignment unsatisfied-clause counts u_i, their histogram N_u, and the
/// solution set, built by exhaustive enumeration.
class UnsatTable {
 public:
  /// Builds a table from precomputed counts; validates counts[i] <= m and
  /// counts.size() == 2^n. Used for clause families DIMACS cannot express.
  static UnsatTable from_counts(int n, int m, std::vector<std::uint32_t> counts);

  int n() const { return n_; }
  int m() const { return m_; }
  Index size() const { return Index{1} << n_; }

  std::span<const std::uint32_t> counts() const { return counts_; }
  /// histogram()[u] = number of assignments with exactly u unsatisfied clauses.
  std::span<const std::uint64_t> histogram() const { return histogram_; }
  std::span<const Index> solutions() const { return solutions_; }

  /// The solution when there is exactly one.
  std::optional<Index> unique_solution() const;
  /// As unique_solution(), but throws InvalidInstance listing the count.
  Index require_unique_solution() const;

 private:
  friend UnsatTable build_unsat_table(const CnfFormula&, int, unsigned);
  UnsatTable(int n, int m, std::vector<std::uint32_t> counts);

  int n_;
  int m_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> histogram_;
  std::vector<Index> solutions_;
};

/// Enumerates all 2^n assignments of `f`. Throws Guard when n > guard_n.
/// The index range is split across `threads` workers; the result does not
/// depend on the split.
UnsatTable build_unsat_table(const CnfFormula& f, int guard_n = kDefaultGuardN,
                             unsigned threads = 1);

}  // namespace clausesearch
