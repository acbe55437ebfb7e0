#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "mhp/errors.hpp"
#include "mhp/io.hpp"

namespace mhp::io {
namespace {

const std::filesystem::path kData = MHP_DATA_DIR;

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Io, InfinityEncodedAsString) {
  EXPECT_EQ(number_to_json(kInf), Json("inf"));
  EXPECT_EQ(number_to_json(-kInf), Json("-inf"));
  EXPECT_EQ(number_from_json(Json("inf"), "/x"), kInf);
  EXPECT_EQ(number_from_json(Json(2.5), "/x"), 2.5);
  EXPECT_THROW(number_from_json(Json("big"), "/x"), InputError);
}

TEST(Io, FixtureModelsRoundTrip) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData)) {
    const Json j = read_json_file(entry.path().string());
    if (!j.contains("oracle_kind")) continue;
    const auto m = parse_model(j);
    const auto again = parse_model(model_to_json(m));
    EXPECT_EQ(m, again) << entry.path();
    EXPECT_EQ(model_to_json(m).dump(), model_to_json(again).dump());
    ++seen;
  }
  EXPECT_GE(seen, 5u);
}

TEST(Io, GridAndPiecewiseRoundTrip) {
  ModelFile m;
  m.space = OutputSpace({0, 10, 25});
  m.utility = UtilityFunction::piecewise_linear({{-3, -2}, {0, 0}, {1, 1}, {5, 2}}, 0, 1).with_domain(-3, 5);
  m.cost = CostFunction::grid({{SimplexPoint({1, 0, 0}), 0.0},
                               {SimplexPoint({0, 1, 0}), 0.5},
                               {SimplexPoint({0, 0, 1}), kInf}});
  m.kind = OracleKind::income_effects;
  m.lambda = 2.0;
  m.search_resolution = 8;
  EXPECT_EQ(parse_model(model_to_json(m)), m);
  const auto cara = UtilityFunction::cara(-1.25, -1, 2);
  EXPECT_EQ(parse_utility(utility_to_json(cara)), cara);
}

TEST(Io, ErrorsCarryFieldPaths) {
  Json j = read_json_file((kData / "moral_hazard.json").string());
  j["cost"]["alpha"] = -1;
  EXPECT_NE(error_of([&] { parse_model(j); }).find("/cost"), std::string::npos);
  j = read_json_file((kData / "moral_hazard.json").string());
  j.erase("utility");
  EXPECT_NE(error_of([&] { parse_model(j); }).find("/utility"), std::string::npos);
  j = read_json_file((kData / "moral_hazard.json").string());
  j["oracle_kind"] = "quantum";
  EXPECT_NE(error_of([&] { parse_model(j); }).find("/oracle_kind"), std::string::npos);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  const auto msg = error_of([] { parse_json_text("{\n  \"a\": 1,\n  oops\n}", "model.json"); });
  EXPECT_NE(msg.find("model.json"), std::string::npos);
  EXPECT_NE(msg.find("line 3"), std::string::npos);
}

TEST(Io, ContractsAndLotteries) {
  const auto space = OutputSpace::indexed(2);
  const auto w = parse_contract(Json::parse(R"({"payoffs": [1.5, [[0, 0.25], [2, 0.75]]]})"), space, "/w");
  EXPECT_EQ(w.at(0), Lottery::degenerate(1.5));
  EXPECT_EQ(w.at(1), Lottery({{0, 0.25}, {2, 0.75}}));
  EXPECT_EQ(parse_contract(contract_to_json(w), space, "/w"), w);
  EXPECT_EQ(parse_contract(Json::parse("[0, 1]"), space, "/w"), parse_contract(Json::parse(R"({"payoffs":[0,1]})"), space, "/w"));
  EXPECT_THROW(parse_contract(Json::parse("[0, 1, 2]"), space, "/w"), InputError);
}

TEST(Io, StandardModelAndDataset) {
  const auto m = parse_standard_model(read_json_file((kData / "standard_model.json").string()));
  EXPECT_EQ(m.costs.size(), 3u);
  EXPECT_EQ(parse_standard_model(standard_model_to_json(m)).costs, m.costs);
  const Json d = read_json_file((kData / "dataset_cycle.json").string());
  EXPECT_EQ(parse_dataset(d, OutputSpace({0, 1})).records.size(), 3u);
  Json bad = d;
  bad["records"][1]["verdict"] = "maybe";
  EXPECT_NE(error_of([&] { parse_dataset(bad, OutputSpace({0, 1})); }).find("/records/1/verdict"), std::string::npos);
}

TEST(Io, WitnessRoundTrip) {
  const auto space = OutputSpace::indexed(2);
  AxiomWitness w{"strict", {Contract::constant(space, Lottery::degenerate(1))}, {0.3}, {1.0, kInf}, 0.01};
  const auto back = parse_axiom_witness(axiom_witness_to_json(w), space);
  EXPECT_EQ(back.form, w.form);
  EXPECT_EQ(back.contracts, w.contracts);
  EXPECT_EQ(back.values, w.values);
  EXPECT_EQ(back.margin, w.margin);
  OrderWitness o{"upshift", {}, {SimplexPoint({0.5, 0.5})}, {{0, 1}}, {1, 2}, 0.5};
  const auto ob = parse_order_witness(order_witness_to_json(o), space);
  EXPECT_EQ(ob.points, o.points);
  EXPECT_EQ(ob.vectors, o.vectors);
  EXPECT_EQ(ob.prize, o.prize);
}

}  // namespace
}  // namespace mhp::io
