#include "clausesearch/generator.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "clausesearch/error.hpp"
#include "clausesearch/rng.hpp"

namespace clausesearch {
namespace {

constexpr int kRepairCandidates = 32;

bool bit(Index a, int variable) { return ((a >> (variable - 1)) & 1U) != 0; }

std::array<int, 3> distinct_variables(Rng& rng, int n) {
  std::array<int, 3> vars{};
  for (std::size_t k = 0; k < vars.size(); ++k) {
    int v;
    do {
      v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    } while (std::find(vars.begin(), vars.begin() + k, v) != vars.begin() + k);
    vars[k] = v;
  }
  return vars;
}

Clause random_clause(Rng& rng, int n) {
  const auto vars = distinct_variables(rng, n);
  std::vector<Literal> lits;
  for (int v : vars) lits.push_back(Literal{v, rng.coin()});
  return Clause(std::move(lits));
}

// Literal on `k` is true under `keep`; the other two are false under `kill`.
Clause separating_clause(Rng& rng, int n, Index keep, Index kill) {
  const Index diff = keep ^ kill;
  std::vector<int> differing;
  for (int v = 1; v <= n; ++v) {
    if (bit(diff, v)) differing.push_back(v);
  }
  const int k = differing[rng.below(differing.size())];
  std::vector<Literal> lits{Literal{k, !bit(keep, k)}};
  while (lits.size() < 3) {
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    const bool taken = std::any_of(lits.begin(), lits.end(),
                                   [v](const Literal& l) { return l.variable == v; });
    if (!taken) lits.push_back(Literal{v, bit(kill, v)});
  }
  return Clause(std::move(lits));
}

void check_size(int n, int m, int guard_n) {
  if (n < 3) fail(ErrorKind::Usage, "3SAT generation needs n >= 3");
  if (m < 1) fail(ErrorKind::Usage, "3SAT generation needs m >= 1");
  if (n > guard_n) {
    fail(ErrorKind::Guard, "n = " + std::to_string(n) +
                               " exceeds the enumeration guard of " +
                               std::to_string(guard_n));
  }
}

}  // namespace

PlantedInstance generate_planted_3sat(int n, int m, std::uint64_t seed,
                                      int guard_n) {
  check_size(n, m, guard_n);
  Rng rng(seed);
  const Index planted = rng.below(Index{1} << n);

  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  while (static_cast<int>(clauses.size()) < m) {
    Clause c = random_clause(rng, n);
    if (eval_clause(c, planted)) clauses.push_back(std::move(c));
  }

  std::vector<Index> survivors;
  {
    const UnsatTable table = build_unsat_table(CnfFormula(n, clauses), guard_n);
    for (Index s : table.solutions()) {
      if (s != planted) survivors.push_back(s);
    }
  }

  while (!survivors.empty()) {
    std::optional<Clause> best;
    std::size_t best_kills = 0;
    for (int attempt = 0; attempt < kRepairCandidates; ++attempt) {
      const Index target = survivors[rng.below(survivors.size())];
      Clause candidate = separating_clause(rng, n, planted, target);
      const auto kills = static_cast<std::size_t>(
          std::count_if(survivors.begin(), survivors.end(),
                        [&](Index s) { return !eval_clause(candidate, s); }));
      if (kills > best_kills) {
        best_kills = kills;
        best = std::move(candidate);
      }
    }
    std::erase_if(survivors, [&](Index s) { return !eval_clause(*best, s); });
    clauses.push_back(std::move(*best));
  }

  CnfFormula formula(n, std::move(clauses));
  const UnsatTable check = build_unsat_table(formula, guard_n);
  if (check.unique_solution() != planted) {
    throw std::logic_error("planted repair left a non-unique solution set");
  }
  return PlantedInstance{std::move(formula), planted, m};
}

CnfFormula generate_random_3sat(int n, int m, std::uint64_t seed) {
  if (n < 3) fail(ErrorKind::Usage, "3SAT generation needs n >= 3");
  if (m < 1) fail(ErrorKind::Usage, "3SAT generation needs m >= 1");
  Rng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) clauses.push_back(random_clause(rng, n));
  return CnfFormula(n, std::move(clauses));
}

}  // namespace clausesearch
