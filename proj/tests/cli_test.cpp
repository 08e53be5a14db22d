#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "clausesearch/cnf.hpp"
#include "clausesearch/generator.hpp"
#include "clausesearch/unsat_table.hpp"

namespace clausesearch {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "clausesearch");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("clausesearch_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesUniqueInstance) {
  const std::string out = path("inst.cnf");
  const Outcome o = invoke({"gen", "-n", "12", "-m", "30", "--seed", "1", "-o", out});
  ASSERT_EQ(o.code, 0) << o.err;
  const CnfFormula f = read_dimacs_file(out);
  const UnsatTable t = build_unsat_table(f);
  ASSERT_TRUE(t.unique_solution().has_value());
  EXPECT_EQ(f.comments().at(0), "planted " + std::to_string(*t.unique_solution()));
  EXPECT_EQ(f.comments().at(1), "seed 1");
}

TEST_F(CliTest, GenUsageErrors) {
  EXPECT_EQ(invoke({"gen", "-m", "30"}).code, cli::kExitUsage);
  const Outcome small = invoke({"gen", "-n", "2", "-m", "5"});
  EXPECT_EQ(small.code, cli::kExitUsage);
  EXPECT_NE(small.err.find("n >= 3"), std::string::npos);
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kExitUsage);
}

TEST_F(CliTest, AnalyzeToyInstance) {
  const std::string f = write("toy.cnf", "p cnf 2 2\n1 0\n2 0\n");
  const Outcome o = invoke({"analyze", "-f", f});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j["B"].get<double>(), 1.22474, 1e-5);
  EXPECT_EQ(j["q_m"], 2);
  EXPECT_EQ(j["validity_warning"], true);
  EXPECT_EQ(j["solution"], 3);
  EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, AnalyzeTableExport) {
  const std::string f = write("multi.cnf", "p cnf 2 1\n1 0\n");
  const Outcome o = invoke({"analyze", "--table", "-f", f});
  ASSERT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["solutions"], nlohmann::json::parse("[1,3]"));
}

TEST_F(CliTest, AnalyzeMultiSolutionExits3) {
  const std::string f = write("multi.cnf", "p cnf 3 1\n1 2 0\n");
  const Outcome o = invoke({"analyze", "-f", f});
  EXPECT_EQ(o.code, cli::kExitInvalidInstance);
  EXPECT_NE(o.err.find("found 6"), std::string::npos);
}

TEST_F(CliTest, MalformedFileExits3) {
  const std::string f = write("bad.cnf", "p cnf 1 1\n1 -1 0\n");
  EXPECT_EQ(invoke({"analyze", "-f", f}).code, cli::kExitInvalidInstance);
}

TEST_F(CliTest, PlantedCommentIsVerified) {
  const std::string f = write("lie.cnf", "c planted 0\np cnf 2 2\n1 0\n2 0\n");
  EXPECT_EQ(invoke({"analyze", "-f", f}).code, cli::kExitInvalidInstance);
}

TEST_F(CliTest, GuardOverride) {
  const auto p = generate_planted_3sat(12, 30, 2);
  const std::string f = write("n12.cnf", serialize_dimacs(p.formula));
  EXPECT_EQ(invoke({"analyze", "-f", f, "--guard-n", "10"}).code, cli::kExitGuard);
  EXPECT_EQ(invoke({"analyze", "-f", f, "--guard-n", "12"}).code, 0);
}

TEST_F(CliTest, SweepCsvHasTwoQmPlusOneRows) {
  const std::string inst = path("inst.cnf");
  ASSERT_EQ(invoke({"gen", "-n", "10", "-m", "20", "--seed", "3", "-o", inst}).code, 0);
  const auto analysis = nlohmann::json::parse(invoke({"analyze", "-f", inst}).out);
  const int q_m = analysis["q_m"];
  const Outcome o = invoke({"sweep", "-f", inst, "--qmax", "auto", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 2 * q_m + 1 + 1);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "q,p_marginal,p_overlap");
}

TEST_F(CliTest, SweepJsonIsByteIdenticalAcrossThreads) {
  const std::vector<std::string> base{"sweep", "--planted", "11,20", "--seed", "4",
                                      "--compare-grover", "--format", "json"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto three = base;
  three.insert(three.end(), {"--threads", "3"});
  const Outcome a = invoke(one);
  const Outcome b = invoke(three);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["version"], "clausesearch 0.1.0");
  EXPECT_TRUE(j.contains("grover_curve"));
}

TEST_F(CliTest, GroverAutoPeaks) {
  const std::string inst = path("inst.cnf");
  ASSERT_EQ(invoke({"gen", "-n", "10", "-m", "10", "-o", inst}).code, 0);
  const Outcome o = invoke({"grover", "-f", inst, "--steps", "auto"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["steps"], 25);
  EXPECT_GE(j["curve"]["p_r"].back().get<double>(), 0.9);
}

TEST_F(CliTest, RunReportsRepeatStatsAndSnapshot) {
  const std::string snap = path("snap.json");
  const Outcome o = invoke({"run", "--planted", "8,4", "--seed", "2", "--trials", "2000",
                            "--snapshot", snap, "--snapshot-threshold", "0.05"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["q"], j["spectral"]["q_m"]);
  EXPECT_GT(j["repeat_until_success"]["mean_repeats"].get<double>(), 1.0);
  const auto s = nlohmann::json::parse(slurp(snap));
  EXPECT_FALSE(s["amplitudes"].empty());
  EXPECT_EQ(invoke({"run", "--planted", "8,4", "--q", "-3"}).code, cli::kExitUsage);
}

TEST_F(CliTest, SpectrumGuard) {
  const auto p = generate_planted_3sat(16, 60, 1);
  const std::string f = write("big.cnf", serialize_dimacs(p.formula));
  EXPECT_EQ(invoke({"spectrum", "-f", f}).code, cli::kExitGuard);
}

TEST_F(CliTest, SpectrumSmallInstance) {
  const Outcome o = invoke({"spectrum", "--planted", "6,3", "--seed", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_LT(j["comparison"]["antisymmetry"].get<double>(), 1e-6);
  EXPECT_EQ(j["eigen"]["dimension"], 128);
}

TEST_F(CliTest, OutputFlagWritesFile) {
  const std::string out = path("summary.json");
  ASSERT_EQ(invoke({"analyze", "--planted", "8,10", "-o", out}).code, 0);
  EXPECT_TRUE(nlohmann::json::accept(slurp(out)));
}

}  // namespace
}  // namespace clausesearch
