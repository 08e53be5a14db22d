#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "clausesearch/cnf.hpp"
#include "clausesearch/error.hpp"
#include "clausesearch/experiment.hpp"
#include "clausesearch/generator.hpp"
#include "clausesearch/parallel.hpp"
#include "clausesearch/report_io.hpp"
#include "clausesearch/spectral.hpp"
#include "clausesearch/state_vector.hpp"
#include "clausesearch/version.hpp"

namespace clausesearch::cli {
namespace {

struct GlobalFlags {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int guard_n = kDefaultGuardN;
};

struct SourceFlags {
  std::string file;
  std::vector<int> planted;  // {n, m}
};

struct Instance {
  std::string label;
  CnfFormula formula;
  UnsatTable table;
};

// "auto" -> nullopt, otherwise a non-negative integer.
std::optional<std::int64_t> parse_auto(const std::string& text, const char* flag) {
  if (text == "auto") return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    fail(ErrorKind::Usage, std::string(flag) + " expects 'auto' or a non-negative integer");
  }
  return value;
}

void add_source_flags(CLI::App* sub, SourceFlags& src) {
  auto* file = sub->add_option("-f,--file", src.file, "DIMACS CNF instance");
  auto* planted = sub->add_option("--planted", src.planted,
                                  "generate a planted 3SAT instance: N,M (uses --seed)")
                      ->expected(2)
                      ->delimiter(',');
  file->excludes(planted);
}

Instance load_instance(const SourceFlags& src, const GlobalFlags& g) {
  if (src.file.empty() && src.planted.empty()) {
    fail(ErrorKind::Usage, "an instance is required: -f FILE or --planted N,M");
  }
  if (!src.planted.empty()) {
    PlantedInstance p = generate_planted_3sat(src.planted[0], src.planted[1], g.seed, g.guard_n);
    UnsatTable table = build_unsat_table(p.formula, g.guard_n, resolve_threads(g.threads));
    std::ostringstream label;
    label << "planted:" << src.planted[0] << ',' << src.planted[1] << ",seed=" << g.seed;
    return Instance{label.str(), std::move(p.formula), std::move(table)};
  }
  CnfFormula f = read_dimacs_file(src.file);
  UnsatTable table = build_unsat_table(f, g.guard_n, resolve_threads(g.threads));
  // A recorded planted solution must agree with enumeration.
  for (const std::string& c : f.comments()) {
    if (c.rfind("planted ", 0) != 0) continue;
    const Index recorded = std::stoull(c.substr(8));
    if (table.unique_solution() != recorded) {
      fail(ErrorKind::InvalidInstance,
           "recorded planted solution " + std::to_string(recorded) +
               " does not match the enumerated solution set (" +
               std::to_string(table.solutions().size()) + " solutions)");
    }
  }
  return Instance{src.file, std::move(f), std::move(table)};
}

void emit(const GlobalFlags& g, const std::string& text, std::ostream& out) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) fail(ErrorKind::Usage, "cannot write '" + g.output + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void warn_validity(const SpectralSummary& s, std::ostream& err) {
  if (s.validity_warning) {
    err << "warning: validity ratio " << s.validity_ratio << " exceeds "
        << kValidityThreshold << " (N >> m^2 regime violated)\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coupling-free quantum search for clause satisfaction: "
               "instance generation, spectral analysis and state-vector simulation",
               "clausesearch"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("-o,--output", g.output, "write the report to this path");
  app.add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "generator / sampling seed");
  app.add_option("--threads", g.threads,
                 "worker threads (default: CLAUSESEARCH_THREADS or 1)");
  app.add_option("--guard-n", g.guard_n, "enumeration guard on n")
      ->check(CLI::Range(1, 63));

  // gen
  int gen_n = 0;
  int gen_m = 0;
  auto* gen = app.add_subcommand("gen", "write a planted unique-solution 3SAT instance");
  gen->add_option("-n", gen_n, "variables")->required();
  gen->add_option("-m", gen_m, "requested clauses")->required();

  // analyze
  SourceFlags analyze_src;
  bool analyze_table = false;
  auto* analyze = app.add_subcommand("analyze", "spectral summary of an instance");
  add_source_flags(analyze, analyze_src);
  analyze->add_flag("--table", analyze_table,
                    "emit the unsatisfied-count table export instead");

  // run
  SourceFlags run_src;
  std::string run_q = "auto";
  std::int64_t run_trials = 10000;
  std::string snapshot_path;
  double snapshot_threshold = 1e-3;
  auto* run_cmd = app.add_subcommand("run", "run the algorithm to q and sample measurements");
  add_source_flags(run_cmd, run_src);
  run_cmd->add_option("--q", run_q, "iterations (auto = q_m)");
  run_cmd->add_option("--trials", run_trials, "measurement trials");
  run_cmd->add_option("--snapshot", snapshot_path, "write amplitudes at q as JSON");
  run_cmd->add_option("--snapshot-threshold", snapshot_threshold,
                      "minimum |amplitude| in the snapshot");

  // sweep
  SourceFlags sweep_src;
  std::string sweep_qmax = "auto";
  std::string sweep_metrics = "both";
  bool sweep_grover = false;
  std::string sweep_grover_steps = "auto";
  bool sweep_timings = false;
  auto* sweep = app.add_subcommand("sweep", "success probability versus iteration count");
  add_source_flags(sweep, sweep_src);
  sweep->add_option("--qmax", sweep_qmax, "last iteration count (auto = 2 q_m)");
  sweep->add_option("--metrics", sweep_metrics, "both, marginal or overlap")
      ->check(CLI::IsMember({"both", "marginal", "overlap"}));
  sweep->add_flag("--compare-grover", sweep_grover, "include the Grover baseline");
  sweep->add_option("--grover-steps", sweep_grover_steps, "baseline steps (auto = floor(pi/4 sqrt N))");
  sweep->add_flag("--timings", sweep_timings, "include wall times in JSON");

  // grover
  SourceFlags grover_src;
  std::string grover_steps = "auto";
  auto* grover = app.add_subcommand("grover", "Grover baseline on the instance's solution");
  add_source_flags(grover, grover_src);
  grover->add_option("--steps", grover_steps, "iterations (auto = floor(pi/4 sqrt N))");

  // spectrum
  SourceFlags spectrum_src;
  bool spectrum_all = false;
  auto* spectrum = app.add_subcommand("spectrum", "dense eigendecomposition check (n <= 10)");
  add_source_flags(spectrum, spectrum_src);
  spectrum->add_flag("--all-phases", spectrum_all, "include every eigenphase");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      PlantedInstance p = generate_planted_3sat(gen_n, gen_m, g.seed, g.guard_n);
      auto& comments = p.formula.comments();
      comments.push_back("planted " + std::to_string(p.planted));
      comments.push_back("seed " + std::to_string(g.seed));
      comments.push_back("requested_clauses " + std::to_string(p.requested_clauses));
      emit(g, serialize_dimacs(p.formula), out);
      return kExitOk;
    }

    if (analyze->parsed()) {
      const Instance inst = load_instance(analyze_src, g);
      if (analyze_table) {
        emit(g, dump(to_json(inst.table)), out);
        return kExitOk;
      }
      const SpectralSummary s = summarize(inst.table);
      warn_validity(s, err);
      Json j = to_json(s);
      j["solution"] = inst.table.require_unique_solution();
      emit(g, dump(j), out);
      return kExitOk;
    }

    if (run_cmd->parsed()) {
      const Instance inst = load_instance(run_src, g);
      RunConfig config;
      config.source = inst.label;
      config.threads = g.threads;
      const SpectralSummary s = summarize(inst.table);
      warn_validity(s, err);
      const std::int64_t q = parse_auto(run_q, "--q").value_or(s.q_m);
      config.q_max = std::max<std::int64_t>(q, 1);
      const RunReport report = run_sweep(inst.table, config);
      const CurvePoint at_q = report.curve.at(static_cast<std::size_t>(q));
      const RepeatStats stats =
          repeat_until_success_stats(inst.table, config, run_trials, g.seed);

      Json j;
      j["version"] = kVersion;
      j["source"] = inst.label;
      j["solution"] = report.solution;
      j["spectral"] = to_json(s);
      j["q"] = q;
      j["p_marginal"] = at_q.p_marginal;
      j["p_overlap"] = at_q.p_overlap;
      j["repeat_until_success"] = to_json(stats);
      j["cost"] = to_json(total_cost_report(report));
      emit(g, dump(j), out);

      if (!snapshot_path.empty()) {
        const PhaseProfile profile(inst.table);
        StateVector state = StateVector::uniform(inst.table.n(), g.guard_n);
        for (std::int64_t k = 0; k < q; ++k) apply_a(state, profile, resolve_threads(g.threads));
        std::ofstream snap(snapshot_path, std::ios::binary);
        if (!snap) fail(ErrorKind::Usage, "cannot write '" + snapshot_path + "'");
        snap << dump(snapshot_json(state, snapshot_threshold));
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      const Instance inst = load_instance(sweep_src, g);
      RunConfig config;
      config.source = inst.label;
      config.threads = g.threads;
      config.q_max = parse_auto(sweep_qmax, "--qmax");
      config.record_marginal = sweep_metrics != "overlap";
      config.record_overlap = sweep_metrics != "marginal";
      config.compare_grover = sweep_grover;
      config.grover_steps = parse_auto(sweep_grover_steps, "--grover-steps");
      config.include_timings = sweep_timings;
      const RunReport report = run_sweep(inst.table, config);
      warn_validity(report.spectral, err);
      emit(g, g.format == "csv" ? curve_csv(report) : dump(to_json(report)), out);
      return kExitOk;
    }

    if (grover->parsed()) {
      const Instance inst = load_instance(grover_src, g);
      const Index r = inst.table.require_unique_solution();
      const std::int64_t steps =
          parse_auto(grover_steps, "--steps").value_or(grover_optimal_steps(inst.table.n()));
      const auto curve = run_grover_baseline(inst.table.n(), r, steps, g.guard_n);
      if (g.format == "csv") {
        emit(g, grover_csv(curve), out);
      } else {
        Json j;
        j["version"] = kVersion;
        j["source"] = inst.label;
        j["n"] = inst.table.n();
        j["solution"] = r;
        j["steps"] = steps;
        Json step_col = Json::array();
        Json p_col = Json::array();
        for (const GroverPoint& p : curve) {
          step_col.push_back(p.step);
          p_col.push_back(p.p_r);
        }
        j["curve"] = Json{{"step", step_col}, {"p_r", p_col}};
        emit(g, dump(j), out);
      }
      return kExitOk;
    }

    if (spectrum->parsed()) {
      const Instance inst = load_instance(spectrum_src, g);
      if (inst.table.n() > kDenseGuardN) {
        fail(ErrorKind::Guard, "spectrum is limited to n <= " + std::to_string(kDenseGuardN) +
                                   ", got n = " + std::to_string(inst.table.n()));
      }
      const SpectralSummary s = summarize(inst.table);
      warn_validity(s, err);
      const EigenPairReport e = dense_eigencheck(inst.table);
      Json j;
      j["version"] = kVersion;
      j["source"] = inst.label;
      j["spectral"] = to_json(s);
      j["eigen"] = to_json(e, spectrum_all);
      const double measured = (e.lambda_plus - e.lambda_minus) / 2.0;
      j["comparison"] = Json{
          {"predicted_lambda", s.lambda_pm},
          {"measured_lambda", measured},
          {"relative_error", std::abs(measured - s.lambda_pm) / s.lambda_pm},
          {"antisymmetry", std::abs(e.lambda_plus + e.lambda_minus)}};
      emit(g, dump(j), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Usage: return kExitUsage;
      case ErrorKind::InvalidInstance: return kExitInvalidInstance;
      case ErrorKind::Guard: return kExitGuard;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace clausesearch::cli
