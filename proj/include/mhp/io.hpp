#pragma once

#include <string>

#include "json.hpp"
#include "mhp/axioms.hpp"
#include "mhp/comparators.hpp"
#include "mhp/contract.hpp"
#include "mhp/cost.hpp"
#include "mhp/dataset.hpp"
#include "mhp/identification.hpp"
#include "mhp/oracle.hpp"
#include "mhp/reduction.hpp"
#include "mhp/utility.hpp"

namespace mhp::io {

using Json = nlohmann::ordered_json;

// Everything needed to build a PreferenceOracle.
struct ModelFile {
  OutputSpace space = OutputSpace::indexed(2);
  UtilityFunction utility = UtilityFunction::linear();
  CostFunction cost = CostFunction::quadratic1d(0.0, 0.0);
  OracleKind kind = OracleKind::moral_hazard;
  double lambda = 0.0;
  std::size_t search_resolution = 20;

  PreferenceOracle oracle() const;
  friend bool operator==(const ModelFile&, const ModelFile&);
};

// Reals that may be infinite are written as numbers or "inf" / "-inf".
Json number_to_json(double x);
double number_from_json(const Json& j, const std::string& where);

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source);

std::string oracle_kind_name(OracleKind k);
OracleKind parse_oracle_kind(const std::string& s, const std::string& where);

Json point_to_json(const SimplexPoint& p);
SimplexPoint parse_point(const Json& j, const std::string& where);

Json utility_to_json(const UtilityFunction& u);
UtilityFunction parse_utility(const Json& j, const std::string& where = "/utility");

Json cost_to_json(const CostFunction& c);
CostFunction parse_cost(const Json& j, const std::string& where = "/cost");

Json model_to_json(const ModelFile& m);
ModelFile parse_model(const Json& j);
ModelFile load_model(const std::string& path);

// A lottery is either a number (sure prize) or [[prize, prob], ...]; a
// contract is {"payoffs": [lottery per output level]} or the bare array.
Json lottery_to_json(const Lottery& x);
Lottery parse_lottery(const Json& j, const std::string& where);
Json contract_to_json(const Contract& w);
Contract parse_contract(const Json& j, const OutputSpace& space, const std::string& where);

Json standard_model_to_json(const StandardModel& m);
StandardModel parse_standard_model(const Json& j);

ChoiceDataset parse_dataset(const Json& j, const OutputSpace& space);
Json dataset_report_to_json(const DatasetReport& r);

Json axiom_witness_to_json(const AxiomWitness& w);
AxiomWitness parse_axiom_witness(const Json& j, const OutputSpace& space);
Json axiom_verdict_to_json(const AxiomVerdict& v);

std::string verdict_name(Verdict v);
Json order_witness_to_json(const OrderWitness& w);
OrderWitness parse_order_witness(const Json& j, const OutputSpace& space);
Json order_verdict_to_json(const OrderVerdict& v);

Json sampler_config_to_json(const SamplerConfig& cfg);

}  // namespace mhp::io
