#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "clausesearch/experiment.hpp"
#include "clausesearch/spectral.hpp"
#include "clausesearch/state_vector.hpp"
#include "clausesearch/unsat_table.hpp"

namespace clausesearch {

// Insertion-ordered so emitted documents are stable and diffable.
using Json = nlohmann::ordered_json;

/// {"n", "m", "histogram", "solutions"}
Json to_json(const UnsatTable& table);
Json to_json(const SpectralSummary& summary);
Json to_json(const EigenPairReport& report, bool include_all_phases = false);
Json to_json(const RepeatStats& stats);
Json to_json(const CostReport& cost);
/// Full run report with config echo and version string. Timings appear only
/// when report.config.include_timings is set.
Json to_json(const RunReport& report);

/// Header `q,p_marginal,p_overlap` (columns follow the recorded metrics),
/// one row per iteration count.
std::string curve_csv(const RunReport& report);
/// Header `step,p_r`.
std::string grover_csv(const std::vector<GroverPoint>& curve);

/// Amplitudes with |a| >= threshold as [[index, re, im], ...] in the
/// b*N + i layout.
Json snapshot_json(const StateVector& state, double threshold);

}  // namespace clausesearch
