#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ffl/cli/commands.hpp"

using namespace ffl::cli;
using json = nlohmann::json;

namespace {

RunConfig config_for(std::uint32_t q, unsigned g) {
  RunConfig c;
  c.q = q;
  c.g = g;
  return c;
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("ffl_cli_test_" + name);
  std::filesystem::remove(p);
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(CliVerify, SmallEnsemblesPass) {
  for (auto [q, g, n] : {std::tuple{3u, 1u, 18}, std::tuple{5u, 1u, 100}, std::tuple{3u, 2u, 162}}) {
    const auto r = cmd_verify(config_for(q, g));
    ASSERT_EQ(r.exit_code, kOk) << r.output;
    const auto j = json::parse(r.output);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["runs"][0]["curves"], n);
    for (const char* suite : {"functional_equation", "approx_fe", "oracle", "rh"})
      EXPECT_EQ(j["runs"][0]["suites"][suite]["checked"], n) << suite;
    EXPECT_GT(j["runs"][0]["suites"]["jacobi_dual"]["checked"].get<int>(), 0);
    EXPECT_GT(j["runs"][0]["suites"]["sieve_gauss"]["checked"].get<int>(), 0);
  }
}

TEST(CliVerify, InjectedFaultIsCaught) {
  auto c = config_for(3, 1);
  c.inject_fault = true;
  const auto r = cmd_verify(c);
  EXPECT_EQ(r.exit_code, kVerificationFailed);
  const auto j = json::parse(r.output);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["runs"][0]["failures"].empty());
  EXPECT_GE(j["runs"][0]["suites"]["functional_equation"]["failed"].get<int>(), 1);
}

TEST(CliVerify, SampleModeIsReproducible) {
  auto c = config_for(5, 2);
  c.mode = Mode::sample;
  c.sample_size = 300;
  c.seed = 11;
  const auto a = cmd_verify(c);
  c.threads = 3;
  const auto b = cmd_verify(c);
  ASSERT_EQ(a.exit_code, kOk);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(json::parse(a.output)["runs"][0]["curves"], 300);
}

TEST(CliMoment, ExactTotalsAndCsvRows) {
  auto c = config_for(5, 1);
  c.g_max = 3;
  c.format = Format::csv;
  const auto r = cmd_moment(c);
  ASSERT_EQ(r.exit_code, kOk) << r.diagnostics;
  const auto l = lines(r.output);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "# ffl-moment-csv v1");
  EXPECT_EQ(l[1].rfind("q,g,mode,ensemble_size,", 0), 0u);
  EXPECT_EQ(l[2].rfind("5,1,exhaustive,100,,,200,0,200,", 0), 0u);
  EXPECT_EQ(l[3].rfind("5,2,exhaustive,2500,,,7096,0,7096,", 0), 0u);
  EXPECT_EQ(l[4].rfind("5,3,exhaustive,62500,,,229232,0,229232,", 0), 0u);
}

TEST(CliMoment, JsonRatioNearOne) {
  auto c = config_for(3, 2);
  c.cutoff = 12;
  const auto r = cmd_moment(c);
  ASSERT_EQ(r.exit_code, kOk);
  const auto row = json::parse(r.output)["rows"][0];
  EXPECT_EQ(row["moment_a"], "448");
  EXPECT_NEAR(std::stod(row["ratio"].get<std::string>()), 1.0, 0.05);
  EXPECT_TRUE(row["runtime_seconds"].is_null());
}

TEST(CliMoment, OutputIndependentOfThreads) {
  auto c = config_for(5, 3);
  c.format = Format::csv;
  const auto one = cmd_moment(c);
  c.threads = 4;
  const auto four = cmd_moment(c);
  ASSERT_EQ(one.exit_code, kOk);
  EXPECT_EQ(one.output, four.output);
}

TEST(CliMoment, SizeCapRefusesAndForceOverrides) {
  auto c = config_for(3, 3);
  c.size_cap = 100;
  EXPECT_EQ(cmd_moment(c).exit_code, kResourceCap);
  EXPECT_EQ(cmd_verify(c).exit_code, kResourceCap);
  c.force = true;
  EXPECT_EQ(cmd_moment(c).exit_code, kOk);
}

TEST(CliMoment, SampleNeedsSeedAndIsReproducible) {
  auto c = config_for(5, 4);
  c.mode = Mode::sample;
  c.sample_size = 2000;
  EXPECT_EQ(cmd_moment(c).exit_code, kUsageError);
  c.seed = 1;
  const auto a = cmd_moment(c);
  c.threads = 2;
  const auto b = cmd_moment(c);
  ASSERT_EQ(a.exit_code, kOk) << a.diagnostics;
  EXPECT_EQ(a.output, b.output);
  const auto row = json::parse(a.output)["rows"][0];
  EXPECT_EQ(row["samples"], "2000");
  EXPECT_NEAR(std::stod(row["ratio"].get<std::string>()), 1.0, 0.1);
}

TEST(CliMoment, CheckpointInterruptAndResume) {
  const auto path = temp_file("moment.json");
  auto c = config_for(5, 3);
  c.format = Format::csv;
  const auto reference = cmd_moment(c);

  c.checkpoint = path.string();
  c.stop_after = 2;
  const auto interrupted = cmd_moment(c);
  EXPECT_EQ(interrupted.exit_code, kInterrupted);
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto state = json::parse(std::ifstream(path));
  EXPECT_EQ(state["schema"], "ffl-checkpoint v1");
  const auto done = state["scans"]["3"]["partitions"].size();
  EXPECT_GE(done, 2u);

  c.stop_after.reset();
  const auto resumed = cmd_moment(c);
  ASSERT_EQ(resumed.exit_code, kOk);
  EXPECT_EQ(resumed.output, reference.output);

  // A checkpoint from another run is rejected.
  c.q = 3;
  EXPECT_EQ(cmd_moment(c).exit_code, kUsageError);
  std::filesystem::remove(path);
}

TEST(CliVerify, CheckpointResumeMatchesFreshRun) {
  const auto path = temp_file("verify.json");
  auto c = config_for(3, 2);
  const auto reference = cmd_verify(c);
  c.checkpoint = path.string();
  c.stop_after = 1;
  EXPECT_EQ(cmd_verify(c).exit_code, kInterrupted);
  c.stop_after.reset();
  const auto resumed = cmd_verify(c);
  EXPECT_EQ(resumed.exit_code, kOk);
  EXPECT_EQ(resumed.output, reference.output);
  std::filesystem::remove(path);
}

TEST(CliValidation, BadArgumentsAreUsageErrors) {
  EXPECT_EQ(cmd_moment(config_for(4, 1)).exit_code, kUsageError);
  EXPECT_EQ(cmd_moment(config_for(2, 1)).exit_code, kUsageError);
  EXPECT_EQ(cmd_verify(config_for(3, 0)).exit_code, kUsageError);
  auto c = config_for(3, 2);
  c.g_max = 1;
  EXPECT_EQ(cmd_moment(c).exit_code, kUsageError);
  c = config_for(3, 1);
  c.threads = 0;
  EXPECT_EQ(cmd_verify(c).exit_code, kUsageError);
}

TEST(CliSmall, LPolynomial) {
  const auto r = cmd_lpoly("x^3+x+1", 3);
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(json::parse(r.output)["coeffs"], json::array({"1", "0", "3"}));
  EXPECT_EQ(cmd_lpoly("x^3 + 2x", 3).exit_code, kOk);
  EXPECT_EQ(cmd_lpoly("x^3+", 3).exit_code, kUsageError);
  EXPECT_EQ(cmd_lpoly("x^2+2*x+1", 3).exit_code, kUsageError);  // a square
}

TEST(CliSmall, SymbolBothAlgorithms) {
  const auto r = cmd_symbol("x^3+x", "x+2", 3);
  ASSERT_EQ(r.exit_code, kOk);
  const auto j = json::parse(r.output);
  EXPECT_EQ(j["symbol"], -1);
  EXPECT_EQ(j["by_factorization"], -1);
  EXPECT_EQ(json::parse(cmd_symbol("x", "x^2+x", 3).output)["symbol"], 0);
  EXPECT_EQ(cmd_symbol("x", "0", 3).exit_code, kUsageError);
}

TEST(CliSmall, OracleAndConstants) {
  const auto r = cmd_oracle("x^5+x^2+1", 3);
  ASSERT_EQ(r.exit_code, kOk) << r.output;
  const auto j = json::parse(r.output);
  EXPECT_TRUE(j["match"].get<bool>());
  EXPECT_EQ(j["point_counts"].size(), 2u);
  const auto k = json::parse(cmd_constants(3, 12).output);
  EXPECT_EQ(k["P1"], "0.734200723004482768982300585204");
  EXPECT_EQ(k["zetaA2"], "3/2");
  EXPECT_EQ(cmd_constants(9, 0).exit_code, kUsageError);
}

TEST(CliSmall, DefaultCutoffs) {
  EXPECT_EQ(default_cutoff(3), 12u);
  EXPECT_EQ(default_cutoff(5), 10u);
  EXPECT_EQ(default_cutoff(7), 9u);  // 7^9 >= 10^7 > 7^8
}
