#include "mhp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mhp/errors.hpp"

namespace mhp::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + "/" + key, "missing field");
  return *it;
}

double real(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::vector<double> reals(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

// Re-labels errors thrown while constructing a domain object with the field path.
template <class F>
auto at(const std::string& where, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (!msg.empty() && msg.front() == '/') throw;
    fail(where, msg);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

PreferenceOracle ModelFile::oracle() const {
  switch (kind) {
    case OracleKind::moral_hazard:
      return PreferenceOracle::moral_hazard(space, cost, utility);
    case OracleKind::malevolent:
      return PreferenceOracle::malevolent(space, cost, utility);
    case OracleKind::income_effects:
      return PreferenceOracle::income_effects(space, cost, utility, lambda, search_resolution);
  }
  throw InputError("unknown oracle kind");
}

bool operator==(const ModelFile& a, const ModelFile& b) {
  return a.space == b.space && a.utility == b.utility && a.cost == b.cost && a.kind == b.kind &&
         a.lambda == b.lambda && a.search_resolution == b.search_resolution;
}

Json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    fail(where, "expected a number, \"inf\" or \"-inf\"");
  }
  return real(j, where);
}

Json parse_json_text(const std::string& content, const std::string& source) {
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::moral_hazard: return "moral_hazard";
    case OracleKind::malevolent: return "malevolent";
    case OracleKind::income_effects: return "income_effects";
  }
  return "?";
}

OracleKind parse_oracle_kind(const std::string& s, const std::string& where) {
  if (s == "moral_hazard") return OracleKind::moral_hazard;
  if (s == "malevolent") return OracleKind::malevolent;
  if (s == "income_effects") return OracleKind::income_effects;
  fail(where, "unknown oracle kind '" + s + "'");
}

Json point_to_json(const SimplexPoint& p) { return Json(p.probs()); }

SimplexPoint parse_point(const Json& j, const std::string& where) {
  auto probs = reals(j, where);
  return at(where, [&] { return SimplexPoint(std::move(probs)); });
}

Json utility_to_json(const UtilityFunction& u) {
  Json j;
  Json params = Json::object();
  switch (u.kind()) {
    case UtilityKind::linear:
      j["kind"] = "linear";
      break;
    case UtilityKind::cara:
      j["kind"] = "cara";
      params["a"] = u.risk_aversion();
      break;
    case UtilityKind::piecewise_linear: {
      j["kind"] = "piecewise_linear";
      Json knots = Json::array();
      for (const auto& k : u.knots()) knots.push_back({k.prize, k.value});
      params["knots"] = knots;
      break;
    }
  }
  j["params"] = params;
  j["reference"] = {u.pi0(), u.pi1()};
  if (u.has_bounded_domain()) j["domain"] = {number_to_json(u.domain_lo()), number_to_json(u.domain_hi())};
  return j;
}

UtilityFunction parse_utility(const Json& j, const std::string& where) {
  const std::string kind = text(field(j, "kind", where), where + "/kind");
  const auto ref = reals(field(j, "reference", where), where + "/reference");
  if (ref.size() != 2) fail(where + "/reference", "expected [pi0, pi1]");
  const Json params = j.contains("params") ? j["params"] : Json::object();
  UtilityFunction u = UtilityFunction::linear();
  if (kind == "linear") {
    u = at(where, [&] { return UtilityFunction::linear(ref[0], ref[1]); });
  } else if (kind == "cara") {
    const double a = real(field(params, "a", where + "/params"), where + "/params/a");
    u = at(where, [&] { return UtilityFunction::cara(a, ref[0], ref[1]); });
  } else if (kind == "piecewise_linear") {
    const std::string kw = where + "/params/knots";
    const Json& ks = field(params, "knots", where + "/params");
    if (!ks.is_array()) fail(kw, "expected an array of [prize, value] pairs");
    std::vector<Knot> knots;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto pair = reals(ks[i], kw + "/" + std::to_string(i));
      if (pair.size() != 2) fail(kw + "/" + std::to_string(i), "expected [prize, value]");
      knots.push_back({pair[0], pair[1]});
    }
    u = at(where, [&] { return UtilityFunction::piecewise_linear(std::move(knots), ref[0], ref[1]); });
  } else {
    fail(where + "/kind", "unknown utility kind '" + kind + "'");
  }
  if (j.contains("domain")) {
    const Json& d = j["domain"];
    if (!d.is_array() || d.size() != 2) fail(where + "/domain", "expected [lo, hi]");
    const double lo = number_from_json(d[0], where + "/domain/0");
    const double hi = number_from_json(d[1], where + "/domain/1");
    u = at(where + "/domain", [&] { return u.with_domain(lo, hi); });
  }
  return u;
}

Json cost_to_json(const CostFunction& c) {
  Json j;
  if (c.form() == CostForm::quadratic1d) {
    j["form"] = "quadratic1d";
    j["alpha"] = c.alpha();
    j["beta"] = c.beta();
    return j;
  }
  j["form"] = "grid";
  Json pts = Json::array();
  for (const auto& cp : c.points()) {
    Json e;
    e["p"] = point_to_json(cp.p);
    e["value"] = number_to_json(cp.value);
    pts.push_back(e);
  }
  j["points"] = pts;
  return j;
}

CostFunction parse_cost(const Json& j, const std::string& where) {
  const std::string form = text(field(j, "form", where), where + "/form");
  if (form == "quadratic1d") {
    const double a = real(field(j, "alpha", where), where + "/alpha");
    const double b = real(field(j, "beta", where), where + "/beta");
    return at(where, [&] { return CostFunction::quadratic1d(a, b); });
  }
  if (form != "grid") fail(where + "/form", "expected \"grid\" or \"quadratic1d\"");
  const Json& pts = field(j, "points", where);
  if (!pts.is_array()) fail(where + "/points", "expected an array");
  std::vector<CostPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string w = where + "/points/" + std::to_string(i);
    auto p = parse_point(field(pts[i], "p", w), w + "/p");
    const double v = number_from_json(field(pts[i], "value", w), w + "/value");
    points.push_back({std::move(p), v});
  }
  return at(where, [&] { return CostFunction::grid(std::move(points)); });
}

Json model_to_json(const ModelFile& m) {
  Json j;
  j["output_space"] = m.space.levels();
  j["utility"] = utility_to_json(m.utility);
  j["cost"] = cost_to_json(m.cost);
  j["oracle_kind"] = oracle_kind_name(m.kind);
  if (m.kind == OracleKind::income_effects) {
    j["lambda"] = m.lambda;
    j["search_resolution"] = m.search_resolution;
  }
  return j;
}

ModelFile parse_model(const Json& j) {
  ModelFile m;
  auto levels = reals(field(j, "output_space", ""), "/output_space");
  m.space = at("/output_space", [&] { return OutputSpace(std::move(levels)); });
  m.utility = parse_utility(field(j, "utility", ""));
  m.cost = parse_cost(field(j, "cost", ""));
  m.kind = j.contains("oracle_kind") ? parse_oracle_kind(text(j["oracle_kind"], "/oracle_kind"), "/oracle_kind")
                                     : OracleKind::moral_hazard;
  if (m.kind == OracleKind::income_effects) m.lambda = real(field(j, "lambda", ""), "/lambda");
  if (j.contains("search_resolution")) {
    if (!j["search_resolution"].is_number_unsigned()) fail("/search_resolution", "expected a positive integer");
    m.search_resolution = j["search_resolution"].get<std::size_t>();
  }
  if (m.cost.dimension() != m.space.size()) fail("/cost", "dimension differs from the output space");
  at("", [&] { return m.oracle(); });
  return m;
}

ModelFile load_model(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return parse_model(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json lottery_to_json(const Lottery& x) {
  if (x.is_degenerate()) return x.support().front().prize;
  Json j = Json::array();
  for (const auto& o : x.support()) j.push_back({o.prize, o.prob});
  return j;
}

Lottery parse_lottery(const Json& j, const std::string& where) {
  if (j.is_number()) return at(where, [&] { return Lottery::degenerate(j.get<double>()); });
  if (!j.is_array()) fail(where, "expected a prize or an array of [prize, prob]");
  std::vector<Outcome> support;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto pair = reals(j[i], where + "/" + std::to_string(i));
    if (pair.size() != 2) fail(where + "/" + std::to_string(i), "expected [prize, prob]");
    support.push_back({pair[0], pair[1]});
  }
  return at(where, [&] { return Lottery(std::move(support)); });
}

Json contract_to_json(const Contract& w) {
  Json pay = Json::array();
  for (const auto& x : w.payoffs()) pay.push_back(lottery_to_json(x));
  Json j;
  j["payoffs"] = pay;
  return j;
}

Contract parse_contract(const Json& j, const OutputSpace& space, const std::string& where) {
  const Json* pay = &j;
  std::string w = where;
  if (j.is_object()) {
    pay = &field(j, "payoffs", where);
    w = where + "/payoffs";
  }
  if (!pay->is_array()) fail(w, "expected an array with one lottery per output level");
  if (pay->size() != space.size())
    fail(w, "expected " + std::to_string(space.size()) + " lotteries, got " + std::to_string(pay->size()));
  std::vector<Lottery> payoffs;
  for (std::size_t i = 0; i < pay->size(); ++i) payoffs.push_back(parse_lottery((*pay)[i], w + "/" + std::to_string(i)));
  return at(where, [&] { return Contract(space, std::move(payoffs)); });
}

Json standard_model_to_json(const StandardModel& m) {
  Json j;
  j["efforts"] = m.efforts;
  j["costs"] = m.costs;
  Json b = Json::array();
  for (const auto& p : m.beliefs) b.push_back(point_to_json(p));
  j["beliefs"] = b;
  return j;
}

StandardModel parse_standard_model(const Json& j) {
  StandardModel m;
  const Json& e = field(j, "efforts", "");
  if (!e.is_array()) fail("/efforts", "expected an array of labels");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_string())
      m.efforts.push_back(e[i].get<std::string>());
    else
      m.efforts.push_back(e[i].dump());
  }
  m.costs = reals(field(j, "costs", ""), "/costs");
  const Json& b = field(j, "beliefs", "");
  if (!b.is_array()) fail("/beliefs", "expected an array of distributions");
  for (std::size_t i = 0; i < b.size(); ++i) m.beliefs.push_back(parse_point(b[i], "/beliefs/" + std::to_string(i)));
  at("", [&] {
    m.validate();
    return 0;
  });
  return m;
}

ChoiceDataset parse_dataset(const Json& j, const OutputSpace& space) {
  ChoiceDataset d;
  const Json& recs = field(j, "records", "");
  if (!recs.is_array()) fail("/records", "expected an array");
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const std::string w = "/records/" + std::to_string(i);
    Contract a = parse_contract(field(recs[i], "first", w), space, w + "/first");
    Contract b = parse_contract(field(recs[i], "second", w), space, w + "/second");
    const std::string v = text(field(recs[i], "verdict", w), w + "/verdict");
    Recorded r;
    if (v == "strict" || v == ">")
      r = Recorded::strict;
    else if (v == "indifferent" || v == "~")
      r = Recorded::indifferent;
    else
      fail(w + "/verdict", "expected \"strict\" or \"indifferent\"");
    d.records.push_back({std::move(a), std::move(b), r});
  }
  return d;
}

Json dataset_report_to_json(const DatasetReport& r) {
  Json j;
  j["consistent"] = r.consistent;
  j["cycles"] = r.cycles;
  j["monotonicity_violations"] = r.monotonicity_violations;
  j["dominance_violations"] = r.dominance_violations;
  return j;
}

namespace {

Json numbers(const std::vector<double>& xs) {
  Json j = Json::array();
  for (double x : xs) j.push_back(number_to_json(x));
  return j;
}

std::vector<double> parse_numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

}  // namespace

Json axiom_witness_to_json(const AxiomWitness& w) {
  Json j;
  j["form"] = w.form;
  Json cs = Json::array();
  for (const auto& c : w.contracts) cs.push_back(contract_to_json(c));
  j["contracts"] = cs;
  j["alphas"] = w.alphas;
  j["values"] = numbers(w.values);
  j["margin"] = number_to_json(w.margin);
  return j;
}

AxiomWitness parse_axiom_witness(const Json& j, const OutputSpace& space) {
  AxiomWitness w;
  w.form = text(field(j, "form", "/witness"), "/witness/form");
  const Json& cs = field(j, "contracts", "/witness");
  if (!cs.is_array()) fail("/witness/contracts", "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i)
    w.contracts.push_back(parse_contract(cs[i], space, "/witness/contracts/" + std::to_string(i)));
  w.alphas = reals(field(j, "alphas", "/witness"), "/witness/alphas");
  if (j.contains("values")) w.values = parse_numbers(j["values"], "/witness/values");
  if (j.contains("margin")) w.margin = number_from_json(j["margin"], "/witness/margin");
  return w;
}

Json axiom_verdict_to_json(const AxiomVerdict& v) {
  Json j;
  j["axiom"] = std::string(axiom_name(v.axiom));
  j["passed"] = v.passed;
  j["samples"] = v.samples;
  j["hypothesis_samples"] = v.hypothesis_samples;
  if (v.surrogate) j["surrogate"] = true;
  if (v.witness) j["witness"] = axiom_witness_to_json(*v.witness);
  return j;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Json order_witness_to_json(const OrderWitness& w) {
  Json j;
  j["note"] = w.note;
  if (!w.contracts.empty()) {
    Json cs = Json::array();
    for (const auto& c : w.contracts) cs.push_back(contract_to_json(c));
    j["contracts"] = cs;
  }
  if (!w.points.empty()) {
    Json ps = Json::array();
    for (const auto& p : w.points) ps.push_back(point_to_json(p));
    j["points"] = ps;
  }
  if (!w.vectors.empty()) j["vectors"] = w.vectors;
  j["values"] = numbers(w.values);
  if (w.prize) j["prize"] = *w.prize;
  return j;
}

OrderWitness parse_order_witness(const Json& j, const OutputSpace& space) {
  OrderWitness w;
  w.note = text(field(j, "note", "/witness"), "/witness/note");
  if (j.contains("contracts")) {
    const Json& cs = j["contracts"];
    if (!cs.is_array()) fail("/witness/contracts", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i)
      w.contracts.push_back(parse_contract(cs[i], space, "/witness/contracts/" + std::to_string(i)));
  }
  if (j.contains("points")) {
    const Json& ps = j["points"];
    if (!ps.is_array()) fail("/witness/points", "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) w.points.push_back(parse_point(ps[i], "/witness/points/" + std::to_string(i)));
  }
  if (j.contains("vectors")) {
    const Json& vs = j["vectors"];
    if (!vs.is_array()) fail("/witness/vectors", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) w.vectors.push_back(reals(vs[i], "/witness/vectors/" + std::to_string(i)));
  }
  if (j.contains("values")) w.values = parse_numbers(j["values"], "/witness/values");
  if (j.contains("prize")) w.prize = real(j["prize"], "/witness/prize");
  return w;
}

Json order_verdict_to_json(const OrderVerdict& v) {
  Json j;
  j["verdict"] = verdict_name(v.verdict);
  j["samples"] = v.samples;
  j["hypothesis_samples"] = v.hypothesis_samples;
  if (v.witness) j["witness"] = order_witness_to_json(*v.witness);
  return j;
}

Json sampler_config_to_json(const SamplerConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["n_samples"] = cfg.n_samples;
  j["prize_range"] = {cfg.prize_lo, cfg.prize_hi};
  j["support_size_max"] = cfg.support_size_max;
  j["mixture_grid"] = cfg.mixture_grid;
  j["min_hypothesis"] = cfg.min_hypothesis;
  j["violation_margin"] = cfg.violation_margin;
  return j;
}

}  // namespace mhp::io
