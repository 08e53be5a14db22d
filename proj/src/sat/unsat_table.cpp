#include "clausesearch/unsat_table.hpp"

#include <string>

#include "clausesearch/error.hpp"
#include "clausesearch/parallel.hpp"

namespace clausesearch {

UnsatTable::UnsatTable(int n, int m, std::vector<std::uint32_t> counts)
    : n_(n), m_(m), counts_(std::move(counts)), histogram_(m + 1, 0) {
  for (Index i = 0; i < counts_.size(); ++i) {
    ++histogram_[counts_[i]];
    if (counts_[i] == 0) solutions_.push_back(i);
  }
}

UnsatTable UnsatTable::from_counts(int n, int m,
                                   std::vector<std::uint32_t> counts) {
  if (n < 1 || n > 63) fail(ErrorKind::Usage, "table needs 1 <= n <= 63");
  if (m < 1) fail(ErrorKind::Usage, "table needs m >= 1");
  if (counts.size() != (Index{1} << n)) {
    fail(ErrorKind::Usage, "count vector length must be 2^n");
  }
  for (std::uint32_t u : counts) {
    if (u > static_cast<std::uint32_t>(m)) {
      fail(ErrorKind::Usage, "unsatisfied count exceeds m");
    }
  }
  return UnsatTable(n, m, std::move(counts));
}

std::optional<Index> UnsatTable::unique_solution() const {
  if (solutions_.size() != 1) return std::nullopt;
  return solutions_.front();
}

Index UnsatTable::require_unique_solution() const {
  if (solutions_.size() != 1) {
    fail(ErrorKind::InvalidInstance,
         "instance must have exactly one solution, found " +
             std::to_string(solutions_.size()));
  }
  return solutions_.front();
}

UnsatTable build_unsat_table(const CnfFormula& f, int guard_n,
                             unsigned threads) {
  const int n = f.num_variables();
  if (n > guard_n) {
    fail(ErrorKind::Guard, "n = " + std::to_string(n) +
                               " exceeds the enumeration guard of " +
                               std::to_string(guard_n));
  }
  const Index size = Index{1} << n;
  std::vector<std::uint32_t> counts(size, 0);

  struct Pattern {
    Index mask;
    Index falsifying;
  };
  std::vector<Pattern> patterns;
  patterns.reserve(f.clauses().size());
  for (const Clause& c : f.clauses()) {
    patterns.push_back({c.variable_mask(), c.falsifying_pattern()});
  }

  parallel_chunks(size, threads, [&](std::size_t begin, std::size_t end) {
    for (Index i = begin; i < end; ++i) {
      std::uint32_t u = 0;
      for (const Pattern& p : patterns) u += (i & p.mask) == p.falsifying;
      counts[i] = u;
    }
  });
  return UnsatTable(n, f.num_clauses(), std::move(counts));
}

}  // namespace clausesearch
