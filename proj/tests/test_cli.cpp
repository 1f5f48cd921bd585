#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lts::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LTS_FIXTURE_DIR) + "/" + name; }

int exit_status(const std::string& args) {
  const std::string cmd = std::string(LTS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Cli, CheckReportsAxioms) {
  const Outcome ok = run({"check", fixture("sphere3.lts.json")});
  EXPECT_EQ(ok.code, lts::cli::kPass);
  EXPECT_TRUE(ok.report()["ok"].get<bool>());

  const Outcome bad = run({"check", fixture("broken.lts.json")});
  EXPECT_EQ(bad.code, lts::cli::kFail);
  EXPECT_FALSE(bad.report()["ok"].get<bool>());
  EXPECT_NE(bad.out.find("[x,x,y]=0"), std::string::npos);

  for (const char* f : {"u2.sla.json", "su2.sla.json", "so3.la.json", "u2_o2.pair.json", "so3_so2.pair.json"})
    EXPECT_EQ(run({"check", fixture(f)}).code, lts::cli::kPass) << f;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"check", "/nonexistent.json"}).code, lts::cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, lts::cli::kInputError);
  EXPECT_EQ(run({}).code, lts::cli::kInputError);
  const auto bad = std::filesystem::temp_directory_path() / "lts_cli_bad.json";
  {
    std::ofstream(bad) << "{\"kind\": \"lts\", \"dim\": ";
  }
  EXPECT_EQ(run({"check", bad.string()}).code, lts::cli::kInputError);
  std::filesystem::remove(bad);
  // A pair whose derived center is not a line.
  EXPECT_EQ(run({"period", fixture("so3_so2.pair.json")}).code, lts::cli::kInputError);
}

TEST(Cli, TextModePrintsKeyValueLines) {
  const Outcome r = run({"--text", "check", fixture("sphere2.lts.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ok: true"), std::string::npos);
}

TEST(Cli, CenterOfUnitaryMinus) {
  const Outcome r = run({"center", fixture("u3_minus.lts.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["dim"].get<int>(), 1);
}

TEST(Cli, PeriodOfShippedPairs) {
  for (const char* f : {"u2_o2.pair.json", "u3_o3.pair.json"}) {
    const Outcome r = run({"period", fixture(f)});
    EXPECT_EQ(r.code, 0);
    const json j = r.report();
    EXPECT_EQ(j["verdict"], "Discrete");
    EXPECT_NEAR(j["generators"][0][0].get<double>(), std::numbers::pi, 1e-8);
  }
  const json plus = run({"period", fixture("u2_plus.pair.json")}).report();
  EXPECT_NEAR(plus["generators"][0][0].get<double>(), 2 * std::numbers::pi, 1e-8);
}

TEST(Cli, PeriodOfExplicitSubgroups) {
  const Outcome dense = run({"period", "--subgroup", "1,1.41421356237"});
  EXPECT_EQ(dense.code, 0);
  EXPECT_EQ(dense.report()["verdict"], "NonDiscreteWitness");
  const Outcome exact = run({"period", "--subgroup", "1,2/3", "--exact"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(exact.report()["verdict"], "Discrete");
  EXPECT_EQ(run({"period", "--subgroup", "1,2,3,4,5,6,7,8,9"}).code, lts::cli::kInputError);
  EXPECT_EQ(run({"period", "--subgroup", "1,1.4142135", "--epsilon", "1e-7"}).code, lts::cli::kFail);
}

TEST(Cli, QuotientDemoVariants) {
  const Outcome root = run({"quotient-demo"});
  EXPECT_EQ(root.code, 0);
  const json j = root.report();
  EXPECT_EQ(j["verdict"], "NonDiscreteWitness");
  EXPECT_LT(j["replay"]["norm_2x_minus_y"].get<double>(), 2e-6);
  EXPECT_EQ(run({"quotient-demo", "--slope", "3/2"}).report()["verdict"], "Discrete");
  EXPECT_EQ(run({"quotient-demo", "--zero-ideal"}).report()["verdict"], "Discrete");
}

TEST(Cli, LoopDemo) {
  const Outcome r = run({"loop-demo", "--T", "4"});
  EXPECT_EQ(r.code, 0);
  const json j = r.report();
  EXPECT_TRUE(j["only_zero_loop"].get<bool>());
  EXPECT_TRUE(j["center_identity"].get<bool>());
  EXPECT_FALSE(j["period_jump_loop"]["passes"].get<bool>());
}

TEST(Cli, EmbedWritesACheckableAlgebra) {
  const auto out = std::filesystem::temp_directory_path() / "lts_cli_embed.json";
  const Outcome r = run({"embed", fixture("sphere3.lts.json"), "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  const json j = r.report();
  EXPECT_EQ(j["h_dim"].get<int>(), 3);
  EXPECT_TRUE(j["round_trip"].get<bool>());
  EXPECT_EQ(run({"check", out.string()}).code, 0);
  std::filesystem::remove(out);
}

TEST(Cli, QuotientAndProduct) {
  const Outcome q = run({"quotient", fixture("u2_minus.lts.json"), "--ideal", "1,1,0"});
  EXPECT_EQ(q.code, 0) << q.out << q.err;
  EXPECT_EQ(run({"quotient", fixture("sphere3.lts.json"), "--ideal", "1,0,0"}).code, lts::cli::kFail);
  const auto out = std::filesystem::temp_directory_path() / "lts_cli_product.json";
  const Outcome p = run({"product", fixture("sphere2.lts.json"), fixture("u2_minus.lts.json"), "--out", out.string()});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.report()["dim"].get<int>(), 5);
  EXPECT_EQ(run({"check", out.string()}).code, 0);
  std::filesystem::remove(out);
}

TEST(Cli, PairExpAndGeodesic) {
  EXPECT_EQ(run({"pair-exp", fixture("u2_o2.pair.json"), "--t", "1.5"}).code, 0);
  const Outcome g = run({"geodesic", fixture("so4_so3.pair.json")});
  EXPECT_EQ(g.code, 0);
  EXPECT_LT(g.report()["worst_residual"].get<double>(), 1e-8);
}

TEST(Cli, ProcessExitCodes) {
  EXPECT_EQ(exit_status("check " + fixture("sphere3.lts.json")), 0);
  EXPECT_EQ(exit_status("check " + fixture("broken.lts.json")), 1);
  EXPECT_EQ(exit_status("check /nonexistent.json"), 2);
  EXPECT_EQ(exit_status("--help"), 0);
}
