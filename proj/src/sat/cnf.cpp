#include "clausesearch/cnf.hpp"

#include <algorithm>

#include "clausesearch/error.hpp"

namespace clausesearch {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) fail(ErrorKind::InvalidInstance, "empty clause");
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()),
                  literals_.end());
  for (std::size_t k = 0; k < literals_.size(); ++k) {
    const Literal& lit = literals_[k];
    if (lit.variable < 1 || lit.variable > 64) {
      fail(ErrorKind::InvalidInstance,
           "variable index out of range: " + std::to_string(lit.variable));
    }
    if (k > 0 && literals_[k - 1].variable == lit.variable) {
      fail(ErrorKind::InvalidInstance,
           "tautological clause on variable " + std::to_string(lit.variable));
    }
    const Index bit = Index{1} << (lit.variable - 1);
    mask_ |= bit;
    // A positive literal is false when its bit is 0, a negated one when 1.
    if (lit.negated) falsifying_ |= bit;
  }
}

CnfFormula::CnfFormula(int num_variables, std::vector<Clause> clauses)
    : n_(num_variables), clauses_(std::move(clauses)) {
  if (n_ < 1) fail(ErrorKind::InvalidInstance, "formula needs n >= 1");
  if (clauses_.empty()) fail(ErrorKind::InvalidInstance, "formula needs m >= 1");
  for (const Clause& c : clauses_) {
    for (const Literal& lit : c.literals()) {
      if (lit.variable > n_) {
        fail(ErrorKind::InvalidInstance,
             "variable index " + std::to_string(lit.variable) +
                 " exceeds declared count " + std::to_string(n_));
      }
    }
  }
}

bool eval_clause(const Clause& clause, Index a) {
  for (const Literal& lit : clause.literals()) {
    const bool value = ((a >> (lit.variable - 1)) & 1U) != 0;
    if (value != lit.negated) return true;
  }
  return false;
}

int unsat_count(const CnfFormula& f, Index a) {
  int count = 0;
  for (const Clause& c : f.clauses()) {
    if (!eval_clause(c, a)) ++count;
  }
  return count;
}

}  // namespace clausesearch
