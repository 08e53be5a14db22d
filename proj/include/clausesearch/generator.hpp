#pragma once

#include <cstdint>

#include "clausesearch/cnf.hpp"
#include "clausesearch/unsat_table.hpp"

namespace clausesearch {

struct PlantedInstance {
  CnfFormula formula;
  Index planted;
  int requested_clauses;  // formula.num_clauses() may be larger after repair
};

/// Random 3SAT instance with exactly one satisfying assignment.
///
/// Draws a planted assignment, then `m` random 3-literal clauses satisfied by
/// it. If enumeration still finds other solutions, clauses are appended that
/// keep the planted assignment satisfied while falsifying surviving
/// solutions: each appended clause is the best of a fixed number of random
/// candidates, scored by how many survivors it eliminates. Deterministic in
/// (n, m, seed).
PlantedInstance generate_planted_3sat(int n, int m, std::uint64_t seed,
                                      int guard_n = kDefaultGuardN);

/// Uniform random 3SAT: m clauses over 3 distinct variables with random
/// signs. No solution structure is imposed.
CnfFormula generate_random_3sat(int n, int m, std::uint64_t seed);

}  // namespace clausesearch
