#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mhp/cli.hpp"
#include "mhp/io.hpp"

namespace mhp::cli {
namespace {

const std::filesystem::path kData = MHP_DATA_DIR;

std::string data(const char* name) { return (kData / name).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string save(const std::string& text, const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() / ("mhp_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

void expect_reverifies(const Run& r, const std::string& name) {
  const auto v = run_cli({"verify-witness", "--report", save(r.out, name)});
  EXPECT_EQ(v.code, kPass) << v.out << v.err;
  EXPECT_GE(v.json()["result"]["witnesses"].size(), 1u);
}

TEST(Cli, FosdExample) {
  const auto r = run_cli({"fosd", "--p", "0.2,0.8", "--q", "0.5,0.5"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.json()["result"]["verdict"], "holds");
  EXPECT_EQ(run_cli({"fosd", "--p", "0.5,0.5", "--q", "0.2,0.8"}).code, kViolation);
  EXPECT_EQ(run_cli({"fosd", "--p", "0.5,0.6", "--q", "0.2,0.8"}).code, kInputError);
}

TEST(Cli, FiguresAlphaSweep) {
  const auto r = run_cli({"figures", "--alpha-sweep", "1.0:0.1:5", "--beta", "0.45"});
  ASSERT_EQ(r.code, kPass);
  std::istringstream in(r.out);
  std::string line;
  std::size_t lines = 0;
  std::getline(in, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 41);
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 101u);
  EXPECT_EQ(run_cli({"figures"}).code, kInputError);
  EXPECT_EQ(run_cli({"figures", "--alpha-sweep", "1:0:2"}).code, kInputError);
}

TEST(Cli, MalevolentQuasiconvexityWitness) {
  const auto r = run_cli({"check-axioms", "--model", data("malevolent.json"), "--axiom", "quasiconvexity", "--seed", "7"});
  ASSERT_EQ(r.code, kViolation) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["config"]["sampler"]["seed"], 7);
  EXPECT_TRUE(j["result"]["verdicts"][0].contains("witness"));
  expect_reverifies(r, "malevolent.json");
}

TEST(Cli, IncomeEffectsMmrWitness) {
  const auto r = run_cli({"check-axioms", "--model", data("income_effects.json"), "--axiom", "mmr", "--seed", "3",
                          "--samples", "100000"});
  ASSERT_EQ(r.code, kViolation) << r.err;
  expect_reverifies(r, "income.json");
}

TEST(Cli, MoralHazardPassesAllAxioms) {
  const auto r = run_cli({"check-axioms", "--model", data("cara.json"), "--seed", "11", "--jobs", "2"});
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_EQ(r.json()["result"]["verdicts"].size(), 7u);
}

TEST(Cli, FewSamplesAreInconclusive) {
  const auto r = run_cli({"check-axioms", "--model", data("moral_hazard.json"), "--axiom", "weak_order", "--seed", "1",
                          "--samples", "20"});
  EXPECT_EQ(r.code, kInconclusive);
}

TEST(Cli, SeedIsMandatoryForSampling) {
  EXPECT_EQ(run_cli({"check-axioms", "--model", data("moral_hazard.json")}).code, kInputError);
  EXPECT_EQ(run_cli({"compare", "confidence", "--a", data("moral_hazard.json"), "--b", data("alpha_2.json")}).code,
            kInputError);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"check-axioms", "--model", data("malevolent.json"), "--seed", "21"};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
  auto c = run_cli(with_jobs).json(), d = a.json();
  EXPECT_EQ(c["result"], d["result"]);
  EXPECT_EQ(c["config"], d["config"]);
}

TEST(Cli, CompareConfidence) {
  const auto ok = run_cli({"compare", "confidence", "--a", data("moral_hazard.json"), "--b", data("alpha_2.json"), "--seed", "1"});
  EXPECT_EQ(ok.code, kPass) << ok.out;
  EXPECT_TRUE(ok.json()["result"]["routes_agree"].get<bool>());
  const auto bad = run_cli({"compare", "confidence", "--a", data("alpha_2.json"), "--b", data("moral_hazard.json"),
                            "--seed", "1", "--samples", "100000"});
  ASSERT_EQ(bad.code, kViolation);
  EXPECT_TRUE(bad.json()["result"]["routes_agree"].get<bool>());
  expect_reverifies(bad, "confidence.json");
  EXPECT_EQ(run_cli({"compare", "sadness", "--a", data("alpha_2.json"), "--b", data("alpha_2.json"), "--seed", "1"}).code,
            kInputError);
}

TEST(Cli, CompareOptimismAndUpshift) {
  const auto ok = run_cli({"compare", "optimism", "--a", data("beta_0.7.json"), "--b", data("beta_0.3.json"), "--seed", "2"});
  EXPECT_EQ(ok.code, kPass) << ok.out;
  EXPECT_TRUE(ok.json()["result"]["utilities_unbounded"].get<bool>());
  const auto cara = run_cli({"compare", "optimism", "--a", data("cara.json"), "--b", data("cara.json"), "--seed", "2"});
  EXPECT_FALSE(cara.json()["result"]["utilities_unbounded"].get<bool>());
  const auto bad = run_cli({"compare", "optimism", "--a", data("beta_0.3.json"), "--b", data("beta_0.7.json"), "--seed",
                            "2", "--samples", "100000"});
  ASSERT_EQ(bad.code, kViolation);
  expect_reverifies(bad, "optimism.json");
  const auto up = run_cli({"upshift", "--c", data("beta_0.3.json"), "--c2", data("beta_0.7.json")});
  ASSERT_EQ(up.code, kViolation);
  expect_reverifies(up, "upshift.json");
  EXPECT_EQ(run_cli({"upshift", "--c", data("beta_0.7.json"), "--c2", data("beta_0.3.json")}).code, kPass);
}

TEST(Cli, LevelSetsAndAbsolute) {
  EXPECT_EQ(run_cli({"levelsets", "--c", data("beta_0.7.json"), "--c2", data("beta_0.3.json")}).code, kPass);
  EXPECT_EQ(run_cli({"levelsets", "--c", data("beta_0.3.json"), "--c2", data("beta_0.7.json"), "--k", "0"}).code,
            kViolation);
  const auto a = run_cli({"assess-absolute", "--c", data("beta_0.3.json"), "--c-star", data("beta_0.7.json")});
  ASSERT_EQ(a.code, kPass);
  EXPECT_FALSE(a.json()["result"]["overconfident"].get<bool>());
  EXPECT_FALSE(a.json()["result"]["optimistic"].get<bool>());
  const auto inline_cost = run_cli({"assess-absolute", "--c", R"({"form":"quadratic1d","alpha":0.5,"beta":0.5})",
                                    "--c-star", data("moral_hazard.json")});
  EXPECT_TRUE(inline_cost.json()["result"]["overconfident"].get<bool>());
}

TEST(Cli, EvalReduceIdentify) {
  const auto e = run_cli({"eval", "--model", data("moral_hazard.json"), "--contract", "[0, 1]"});
  ASSERT_EQ(e.code, kPass) << e.err;
  EXPECT_NEAR(e.json()["result"]["value"].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(e.json()["result"]["certainty_equivalent"].get<double>(), 0.75, 1e-12);

  const auto r = run_cli({"reduce", "--standard", data("standard_model.json"), "--grid-resolution", "10"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto c = io::parse_cost(r.json()["result"]["cost"], "/cost");
  EXPECT_NEAR(cost_at(c, SimplexPoint({0.4, 0.6})), 0.3, 1e-9);

  const auto i = run_cli({"identify", "--model", data("cara.json")});
  ASSERT_EQ(i.code, kInputError);  // cara is bounded above, so c is not identified
  const auto l = run_cli({"identify", "--model", data("moral_hazard.json"), "--lattice-step", "0.1"});
  ASSERT_EQ(l.code, kPass) << l.err;
  EXPECT_LT(l.json()["result"]["utility_sup_error"].get<double>(), 1e-3);
}

TEST(Cli, DatasetCycle) {
  const auto r = run_cli({"check-dataset", "--dataset", data("dataset_cycle.json")});
  EXPECT_EQ(r.code, kViolation);
  EXPECT_EQ(r.json()["result"]["cycles"].size(), 1u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"eval", "--bogus"}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  const auto missing = run_cli({"eval", "--model", "/nonexistent.json", "--contract", "[0,1]"});
  EXPECT_EQ(missing.code, kInputError);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  const auto bad = save(R"({"output_space":[0,1],"utility":{"kind":"linear","params":{},"reference":[0,1]},
    "cost":{"form":"quadratic1d","alpha":1,"beta":2},"oracle_kind":"moral_hazard"})", "bad.json");
  const auto schema = run_cli({"eval", "--model", bad, "--contract", "[0,1]"});
  EXPECT_EQ(schema.code, kInputError);
  EXPECT_NE(schema.err.find("/cost"), std::string::npos);
  EXPECT_EQ(run_cli({"eval", "--model", data("moral_hazard.json"), "--contract", "[0,1,2]"}).code, kInputError);
  EXPECT_EQ(run_cli({"verify-witness", "--report", data("moral_hazard.json")}).code, kInputError);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run_cli({"--help"}).code, kPass); }

TEST(Cli, CertifySingleCriterion) {
  const auto r = run_cli({"certify", "--only", "8"});
  EXPECT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.err.find("[PASS] 8"), std::string::npos);
}

}  // namespace
}  // namespace mhp::cli
