#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "polyquant/cli/commands.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant::cli {
namespace {

using Json = nlohmann::json;

RunConfig json_config() {
  RunConfig cfg;
  cfg.format = Format::json;
  return cfg;
}

struct ToolRun {
  int code;
  std::string out;
};

ToolRun run_tool(const std::string& args) {
  std::string cmd = std::string(POLYQUANT_TOOL) + " " + args + " 2>&1";
  ToolRun r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Quantize, Examples) {
  RunConfig cfg = json_config();
  Json a = Json::parse(cmd_quantize("pi0*pi1", cfg).output);
  EXPECT_EQ(a["restricted"], "-(i*pi1*hbar*c/L^3) d/dphi");
  Json b = Json::parse(cmd_quantize("x0", cfg).output);
  EXPECT_EQ(b["restricted"], "x0");
  Json c = Json::parse(cmd_quantize("pi0^2", cfg).output);
  EXPECT_TRUE(c["quadratic_in_pi0"].get<bool>());
  EXPECT_NE(c["unrestricted"].get<std::string>().find("-pi0^2"), std::string::npos);
  EXPECT_FALSE(c["preserves_states"].get<bool>());
}

TEST(Quantize, ParseErrorIsUsageError) {
  Outcome out = cmd_quantize("pi0 +", RunConfig{});
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_NE(out.output.find("position 5"), std::string::npos) << out.output;
}

TEST(Derive, CommutatorTable) {
  Outcome out = cmd_derive(DeriveTarget::commutators, 0, json_config());
  ASSERT_EQ(out.exit_code, 0);
  Json doc = Json::parse(out.output);
  int nonzero = 0;
  for (const auto& e : doc["entries"]) {
    if (e["commutator"] != "0") {
      ++nonzero;
      EXPECT_EQ(e["commutator"], "i*hbar*c/L^3");
      EXPECT_EQ(e["integrated"], "i*hbar*c");
    }
  }
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(doc["entries"].size(), 10u);
}

TEST(Derive, MomentumAndEnergySchema) {
  RunConfig cfg = json_config();
  Json p = Json::parse(cmd_derive(DeriveTarget::momentum, 2, cfg).output);
  for (const char* key : {"operator", "state", "eigenvalue", "is_eigen", "anomaly", "residual"}) {
    EXPECT_TRUE(p.contains(key)) << key;
  }
  EXPECT_EQ(p["eigenvalue"], "hbar*k2");
  EXPECT_EQ(p["status"], "PASS");

  cfg.massless = true;
  Json e = Json::parse(cmd_derive(DeriveTarget::energy, 0, cfg).output);
  EXPECT_EQ(e["eigenvalue"], "hbar*omega");
  EXPECT_TRUE(e["is_eigen"].get<bool>());
}

TEST(Derive, MomentumComponentOutOfRange) {
  EXPECT_EQ(cmd_derive(DeriveTarget::momentum, 4, RunConfig{}).exit_code, 2);
}

TEST(Derive, VolumeModeV) {
  RunConfig cfg = json_config();
  cfg.volume_mode = VolumeMode::fixed_to_v;
  Json doc = Json::parse(cmd_derive(DeriveTarget::commutators, 0, cfg).output);
  EXPECT_EQ(doc["entries"][0]["commutator"], "i*hbar*c/V");
  EXPECT_EQ(doc["status"], "PASS");
}

TEST(Rendering, TextAndJsonCarryTheSameExpressions) {
  RunConfig text;
  RunConfig json = json_config();
  for (auto target : {DeriveTarget::momentum, DeriveTarget::energy}) {
    Json doc = Json::parse(cmd_derive(target, 1, json).output);
    std::string rendered = cmd_derive(target, 1, text).output;
    for (const char* key : {"operator", "eigenvalue", "anomaly", "residual", "pulled_result"}) {
      std::string value = doc[key];
      EXPECT_NE(rendered.find(std::string(key) + ": " + value + "\n"), std::string::npos) << key;
      if (std::string(key) != "operator") EXPECT_EQ(to_string(parse_expr(value)), value);
    }
  }
}

TEST(Rendering, Deterministic) {
  RunConfig cfg = json_config();
  cfg.samples = 20;
  EXPECT_EQ(cmd_check(CheckTarget::oracle, cfg).output, cmd_check(CheckTarget::oracle, cfg).output);
  EXPECT_EQ(cmd_verify_all(cfg).output, cmd_verify_all(cfg).output);
  EXPECT_EQ(cmd_derive(DeriveTarget::energy, 0, cfg).output, cmd_derive(DeriveTarget::energy, 0, cfg).output);
  RunConfig other = cfg;
  other.seed = 99;
  EXPECT_NE(cmd_check(CheckTarget::oracle, cfg).output, cmd_check(CheckTarget::oracle, other).output);
}

TEST(Check, KgCases) {
  Json doc = Json::parse(cmd_check(CheckTarget::kg, json_config()).output);
  EXPECT_EQ(doc["status"], "PASS");
  for (const auto& c : doc["cases"]) EXPECT_EQ(c["status"], "PASS") << c["label"];
  RunConfig bad = json_config();
  bad.extent = 2;
  EXPECT_EQ(cmd_check(CheckTarget::kg, bad).exit_code, 2);
  bad = json_config();
  bad.h = -1.0;
  EXPECT_EQ(cmd_check(CheckTarget::kg, bad).exit_code, 2);
}

TEST(VerifyAll, CleanRunPasses) {
  Outcome out = cmd_verify_all(json_config());
  ASSERT_EQ(out.exit_code, 0) << out.output;
  Json doc = Json::parse(out.output);
  EXPECT_GE(doc["total"].get<int>(), 20);
  EXPECT_EQ(doc["failed"], 0);
  EXPECT_TRUE(doc["first_failure"].is_null());
}

std::set<std::string> failing(const RunConfig& cfg) {
  std::set<std::string> out;
  for (const auto& c : run_verification_suite(cfg)) {
    if (!c.passed) out.insert(c.name);
  }
  return out;
}

TEST(VerifyAll, FaultsAreCaught) {
  RunConfig kappa;
  kappa.faults.flip_kappa_sign = true;
  EXPECT_TRUE(failing(kappa).count("canonical-commutator"));
  Outcome out = cmd_verify_all(kappa);
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_NE(out.output.find("FAIL  canonical-commutator"), std::string::npos);
  EXPECT_NE(out.output.find("first failure: "), std::string::npos);

  RunConfig unrestricted;
  unrestricted.faults.skip_state_restriction = true;
  EXPECT_TRUE(failing(unrestricted).count("coordinate-operator-phi"));

  RunConfig off_shell;
  off_shell.faults.drop_on_shell = true;
  EXPECT_TRUE(failing(off_shell).count("klein-gordon-on-shell"));
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("quantize x0").code, 0);
  EXPECT_EQ(run_tool("quantize 'pi0 *'").code, 2);
  EXPECT_EQ(run_tool("derive").code, 2);
  EXPECT_EQ(run_tool("report momentum --j 7").code, 2);
  EXPECT_EQ(run_tool("--format yaml verify-all").code, 2);
  EXPECT_EQ(run_tool("nonsense").code, 2);
  EXPECT_EQ(run_tool("verify-all").code, 0);
  EXPECT_EQ(run_tool("verify-all --inject-fault kappa-sign").code, 1);
  EXPECT_EQ(run_tool("--help").code, 0);
}

TEST(Tool, FlagsAfterSubcommand) {
  ToolRun r = run_tool("report energy --massless --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["eigenvalue"], "hbar*omega");
  ToolRun off = run_tool("derive momentum --j 1 --off-shell --format json");
  ASSERT_EQ(off.code, 0) << off.out;
  EXPECT_FALSE(Json::parse(off.out)["on_shell"].get<bool>());
}

TEST(Tool, ByteIdenticalRuns) {
  ToolRun a = run_tool("check oracle --seed 7 --samples 20 --format json");
  ToolRun b = run_tool("check oracle --seed 7 --samples 20 --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace polyquant::cli
