#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace clausesearch {

/// Assignment index: bit k-1 holds the value of variable x_k.
using Index = std::uint64_t;

struct Literal {
  int variable = 1;  // 1-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;

  /// Signed DIMACS form.
  int dimacs() const { return negated ? -variable : variable; }
};

/// A disjunction of literals. Construction normalizes (sorts, drops
/// duplicates) and rejects empty or tautological clauses.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }

  /// Bitmask over assignment bits touched by the clause.
  Index variable_mask() const { return mask_; }
  /// The unique pattern (restricted to variable_mask()) falsifying the clause.
  Index falsifying_pattern() const { return falsifying_; }

  bool operator==(const Clause& other) const {
    return literals_ == other.literals_;
  }

 private:
  std::vector<Literal> literals_;
  Index mask_ = 0;
  Index falsifying_ = 0;
};

class CnfFormula {
 public:
  CnfFormula(int num_variables, std::vector<Clause> clauses);

  int num_variables() const { return n_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Comment lines carried through DIMACS I/O (without the leading "c ").
  std::vector<std::string>& comments() { return comments_; }
  const std::vector<std::string>& comments() const { return comments_; }

  bool operator==(const CnfFormula& other) const {
    return n_ == other.n_ && clauses_ == other.clauses_;
  }

 private:
  int n_;
  std::vector<Clause> clauses_;
  std::vector<std::string> comments_;
};

/// True iff at least one literal of `clause` is true under assignment `a`.
bool eval_clause(const Clause& clause, Index a);

/// Number of clauses of `f` falsified by `a`.
int unsat_count(const CnfFormula& f, Index a);

CnfFormula parse_dimacs(std::string_view text);
CnfFormula read_dimacs_file(const std::string& path);

std::string serialize_dimacs(const CnfFormula& f);
void write_dimacs_file(const CnfFormula& f, const std::string& path);

}  // namespace clausesearch
