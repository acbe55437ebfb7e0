#include "mhp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "mhp/acceptance.hpp"
#include "mhp/axioms.hpp"
#include "mhp/comparators.hpp"
#include "mhp/dataset.hpp"
#include "mhp/errors.hpp"
#include "mhp/figures.hpp"
#include "mhp/identification.hpp"
#include "mhp/io.hpp"
#include "mhp/reduction.hpp"

namespace mhp::cli {

namespace {

using io::Json;

constexpr double kReproduceTol = 1e-9;

// --- argument helpers ------------------------------------------------------

// A value starting with '{' or '[' is inline JSON; anything else names a file.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return io::parse_json_text(arg, "<inline>");
  return io::read_json_file(arg);
}

// Accepts a model file or a bare cost object.
CostFunction load_cost(const std::string& arg) {
  const Json j = load_json(arg);
  if (j.is_object() && j.contains("cost") && j.contains("output_space")) return io::parse_model(j).cost;
  return io::parse_cost(j, "");
}

std::vector<double> parse_list(const std::string& s, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw InputError(flag + ": '" + item + "' is not a number");
    out.push_back(x);
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

std::vector<double> range_or_list(const std::string& s, const std::string& flag) {
  if (s.find(':') != std::string::npos) {
    try {
      return parse_range(s);
    } catch (const Error& e) {
      throw InputError(flag + ": " + e.what());
    }
  }
  return parse_list(s, flag);
}

SimplexPoint parse_probs(const std::string& s, const std::string& flag) {
  try {
    return SimplexPoint(parse_list(s, flag));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(flag + ": " + e.what());
  }
}

Json points_json(std::span<const SimplexPoint> ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(io::point_to_json(p));
  return a;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds: return kPass;
    case Verdict::fails: return kViolation;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInputError;
}

// Shared sampling options.
struct SamplingFlags {
  std::uint64_t seed = 0;
  std::size_t samples = 10'000;
  unsigned jobs = 1;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "RNG seed")->required();
    app->add_option("--samples", samples, "number of sampled trials")->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads (output does not depend on it)")->capture_default_str();
  }
  SamplerConfig config() const {
    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.n_samples = samples;
    cfg.jobs = jobs == 0 ? 1 : jobs;
    cfg.validate();
    return cfg;
  }
};

// --- report ---------------------------------------------------------------

struct Report {
  std::string command;
  Json config = Json::object();
  Json result = Json::object();
  std::string summary;
};

void emit(std::ostream& out, const Report& r, const std::vector<std::string>& args) {
  Json j;
  j["command"] = r.command;
  j["argv"] = args;
  j["config"] = r.config;
  j["result"] = r.result;
  j["summary"] = r.summary;
  out << j.dump(2) << "\n";
}

// --- witness re-verification -----------------------------------------------

struct Check {
  std::string what;
  bool ok;
  Json detail;
};

// Order witnesses store values rather than a margin, so a reproduced
// violation is the test.
Check check_margin(const std::string& what, std::optional<double> rev) {
  Json d;
  d["reproduced_margin"] = rev ? Json(*rev) : Json(nullptr);
  return {what, rev.has_value(), d};
}

Check check_upshift(const CostFunction& c, const CostFunction& c2, const OrderWitness& w) {
  Json d;
  if (w.points.size() != 2) throw InputError("/witness/points: expected two points");
  const auto r = upshift_pair(c, c2, w.points[0], w.points[1]);
  d["best_total"] = io::number_to_json(r.best_total);
  d["reference_total"] = io::number_to_json(r.reference_total);
  d["gap"] = io::number_to_json(r.gap);
  return {"upshift", !r.holds, d};
}

Check check_parametric(const io::ModelFile& a, const io::ModelFile& b, const OrderWitness& w) {
  Json d;
  if (w.note == "utility") {
    if (!w.prize) throw InputError("/witness/prize: missing");
    const double x = a.utility(*w.prize), y = b.utility(*w.prize);
    d["values"] = {x, y};
    return {"parametric confidence", !(std::abs(x - y) <= 1e-9), d};
  }
  if (w.points.size() != 1) throw InputError("/witness/points: expected one point");
  const double x = cost_at(a.cost, w.points[0]), y = cost_at(b.cost, w.points[0]);
  d["values"] = {io::number_to_json(x), io::number_to_json(y)};
  return {"parametric confidence", x > y + 1e-9, d};
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + "/" + key + ": missing field");
  return j[key];
}

std::vector<Check> verify_report(const Json& rep) {
  const std::string command = need(rep, "command", "").get<std::string>();
  const Json& config = need(rep, "config", "");
  const Json& result = need(rep, "result", "");
  std::vector<Check> checks;
  if (command == "check-axioms") {
    const auto m = io::parse_model(need(config, "model", "/config"));
    const auto o = m.oracle();
    for (const auto& v : need(result, "verdicts", "/result")) {
      if (!v.contains("witness")) continue;
      const auto name = need(v, "axiom", "/result/verdicts").get<std::string>();
      const auto ax = parse_axiom(name);
      if (!ax) throw InputError("/result/verdicts: unknown axiom " + name);
      const auto w = io::parse_axiom_witness(v["witness"], m.space);
      const auto rev = reverify_axiom_witness(o, *ax, w);
      Json d;
      d["stored_margin"] = io::number_to_json(w.margin);
      d["reproduced_margin"] = rev ? Json(*rev) : Json(nullptr);
      checks.push_back({name, rev.has_value() && std::abs(*rev - w.margin) <= kReproduceTol, d});
    }
  } else if (command == "compare") {
    const auto a = io::parse_model(need(config, "a", "/config"));
    const auto b = io::parse_model(need(config, "b", "/config"));
    const std::string relation = need(config, "relation", "/config").get<std::string>();
    const Json& beh = need(result, "behavioral", "/result");
    if (beh.contains("witness")) {
      const auto w = io::parse_order_witness(beh["witness"], a.space);
      const auto rev = relation == "confidence" ? reverify_confidence_witness(a.oracle(), b.oracle(), w)
                                                : reverify_optimism_witness(a.oracle(), b.oracle(), w);
      checks.push_back(check_margin(relation + " behavioral", rev));
    }
    if (result.contains("parametric") && result["parametric"].contains("witness"))
      checks.push_back(check_parametric(a, b, io::parse_order_witness(result["parametric"]["witness"], a.space)));
    if (result.contains("upshift") && result["upshift"].contains("witness"))
      checks.push_back(check_upshift(a.cost, b.cost, io::parse_order_witness(result["upshift"]["witness"], a.space)));
    if (result.contains("conjugate_order") && result["conjugate_order"].contains("witness")) {
      const auto w = io::parse_order_witness(result["conjugate_order"]["witness"], a.space);
      checks.push_back(check_margin("conjugate order", reverify_lemma_b_witness(a.cost, b.cost, w)));
    }
  } else if (command == "upshift") {
    const auto c = io::parse_cost(need(config, "c", "/config"), "/config/c");
    const auto c2 = io::parse_cost(need(config, "c2", "/config"), "/config/c2");
    if (result.contains("witness"))
      checks.push_back(check_upshift(c, c2, io::parse_order_witness(result["witness"], OutputSpace::indexed(c.dimension()))));
  } else {
    throw InputError("/command: reports from '" + command + "' carry no witnesses to verify");
  }
  return checks;
}

// --- command runners -------------------------------------------------------

struct Options {
  std::string model, contract, standard, dataset, a, b, c, c2, c_star, report;
  std::string axiom = "all";
  std::string prizes = "-5:0.5:5";
  std::string ks = "0.01,0.04,0.09,0.25";
  std::string p, q, alpha_sweep_arg, beta_sweep_arg;
  std::string relation;
  std::optional<std::size_t> grid_resolution;
  std::size_t pair_resolution = 20;
  std::size_t points = 101;
  double lattice_bound = 4.0;
  double lattice_step = 0.5;
  double alpha = 1.0;
  double beta = 0.45;
  std::vector<int> only;
  std::uint64_t certify_seed = 20261016;
  unsigned certify_jobs = 1;
  SamplingFlags sampling;
};

std::size_t resolution_or(const Options& o, std::size_t fallback) { return o.grid_resolution.value_or(fallback); }

int cmd_eval(const Options& opt, Report& r) {
  const auto m = io::load_model(opt.model);
  const auto o = m.oracle();
  const auto w = io::parse_contract(load_json(opt.contract), m.space, "/contract");
  r.config["model"] = io::model_to_json(m);
  r.config["contract"] = io::contract_to_json(w);
  const double v = value(o, w);
  r.result["value"] = io::number_to_json(v);
  try {
    r.result["certainty_equivalent"] = io::number_to_json(certainty_equivalent(o, w));
  } catch (const Error& e) {
    r.result["certainty_equivalent"] = nullptr;
    r.result["certainty_equivalent_note"] = e.what();
  }
  r.result["utility_vector"] = utility_vector(m.utility, w);
  if (m.kind != OracleKind::income_effects) r.result["argmax"] = points_json(argmax_efforts(o, w));
  r.summary = "value " + std::to_string(v);
  return kPass;
}

int cmd_reduce(const Options& opt, Report& r) {
  const auto model = io::parse_standard_model(load_json(opt.standard));
  const std::size_t m = resolution_or(opt, 20);
  const auto grid = simplex_grid(model.dimension(), m);
  r.config["standard_model"] = io::standard_model_to_json(model);
  r.config["grid_resolution"] = m;
  r.result["cost"] = io::cost_to_json(reduce_standard(model, grid));
  r.summary = "reduced cost on " + std::to_string(grid.size() + model.beliefs.size()) + " points";
  return kPass;
}

int cmd_identify(const Options& opt, Report& r) {
  const auto m = io::load_model(opt.model);
  const auto o = m.oracle();
  IdentificationConfig cfg;
  cfg.prize_grid = range_or_list(opt.prizes, "--prizes");
  std::sort(cfg.prize_grid.begin(), cfg.prize_grid.end());
  const std::size_t n = m.space.size();
  cfg.f_grid = utility_lattice(n, opt.lattice_bound, opt.lattice_step);
  cfg.p_grid = simplex_grid(n, resolution_or(opt, n == 2 ? 20 : 6));
  r.config["model"] = io::model_to_json(m);
  r.config["prizes"] = cfg.prize_grid;
  r.config["lattice"] = {{"bound", opt.lattice_bound}, {"step", opt.lattice_step}};
  r.config["grid_resolution"] = resolution_or(opt, n == 2 ? 20 : 6);
  const auto u = recover_u(o, cfg);
  Json uj = Json::array();
  double worst = 0.0;
  for (double x : cfg.prize_grid) {
    uj.push_back({x, u(x)});
    worst = std::max(worst, std::abs(u(x) - m.utility(x)));
  }
  r.result["utility"] = uj;
  r.result["utility_sup_error"] = worst;
  // Past the prize grid the recovered u is a linear extrapolation, so the
  // lattice has to stay inside the range actually observed.
  const double seen_lo = u(cfg.prize_grid.front()), seen_hi = u(cfg.prize_grid.back());
  for (const auto& f : cfg.f_grid)
    for (double x : f)
      if (x < seen_lo || x > seen_hi)
        throw PreconditionError("utility lattice reaches " + std::to_string(x) + " but the prizes only span utilities [" +
                                std::to_string(seen_lo) + ", " + std::to_string(seen_hi) +
                                "]; widen --prizes or lower --lattice-bound");
  const auto c = recover_c(o, u, cfg);
  r.result["cost"] = io::cost_to_json(c);
  r.summary = "recovered u on " + std::to_string(cfg.prize_grid.size()) + " prizes (sup error " +
              std::to_string(worst) + ") and c on " + std::to_string(cfg.p_grid.size()) + " points";
  return kPass;
}

int cmd_check_axioms(const Options& opt, Report& r) {
  const auto m = io::load_model(opt.model);
  const auto o = m.oracle();
  const auto cfg = opt.sampling.config();
  std::vector<Axiom> which;
  if (opt.axiom == "all") {
    which.assign(std::begin(kAllAxioms), std::end(kAllAxioms));
  } else {
    for (const auto& name : CLI::detail::split(opt.axiom, ',')) {
      const auto a = parse_axiom(name);
      if (!a) throw InputError("--axiom: unknown axiom '" + name + "'");
      which.push_back(*a);
    }
  }
  r.config["model"] = io::model_to_json(m);
  r.config["sampler"] = io::sampler_config_to_json(cfg);
  Json names = Json::array();
  for (Axiom a : which) names.push_back(std::string(axiom_name(a)));
  r.config["axioms"] = names;

  Json verdicts = Json::array();
  int code = kPass;
  std::string failed, thin;
  for (Axiom a : which) {
    const auto v = check_axiom(o, a, cfg);
    Json j = io::axiom_verdict_to_json(v);
    const bool inconclusive = v.passed && v.hypothesis_samples < cfg.min_hypothesis;
    j["verdict"] = !v.passed ? "fails" : inconclusive ? "inconclusive" : "holds";
    verdicts.push_back(j);
    if (!v.passed) {
      code = kViolation;
      failed += (failed.empty() ? "" : ", ") + std::string(axiom_name(a));
    } else if (inconclusive) {
      if (code == kPass) code = kInconclusive;
      thin += (thin.empty() ? "" : ", ") + std::string(axiom_name(a));
    }
  }
  r.result["verdicts"] = verdicts;
  r.summary = failed.empty() ? "no violations in " + std::to_string(cfg.n_samples) + " samples per axiom"
                             : "violated: " + failed;
  if (!thin.empty()) r.summary += "; too few hypothesis samples: " + thin;
  return code;
}

int cmd_check_dataset(const Options& opt, Report& r) {
  const Json j = load_json(opt.dataset);
  std::optional<OutputSpace> space;
  if (j.is_object() && j.contains("output_space")) {
    std::vector<double> levels;
    for (std::size_t i = 0; i < j["output_space"].size(); ++i)
      levels.push_back(io::number_from_json(j["output_space"][i], "/output_space/" + std::to_string(i)));
    space.emplace(std::move(levels));
  } else if (!opt.model.empty()) {
    space = io::load_model(opt.model).space;
  } else {
    throw InputError("/output_space: missing field (or pass --model)");
  }
  const auto d = io::parse_dataset(j, *space);
  const auto rep = dataset_consistency(d);
  r.config["records"] = d.records.size();
  r.result = io::dataset_report_to_json(rep);
  r.summary = rep.consistent ? "consistent" : "inconsistent";
  return rep.consistent ? kPass : kViolation;
}

std::vector<SimplexPoint> comparison_grid(std::size_t n, const Options& opt) {
  return simplex_grid(n, resolution_or(opt, n == 2 ? 100 : 10));
}

int cmd_compare(const Options& opt, Report& r) {
  const auto a = io::load_model(opt.a);
  const auto b = io::load_model(opt.b);
  if (!(a.space == b.space)) throw InputError("--b: output space differs from --a");
  const auto cfg = opt.sampling.config();
  r.config["relation"] = opt.relation;
  r.config["a"] = io::model_to_json(a);
  r.config["b"] = io::model_to_json(b);
  r.config["sampler"] = io::sampler_config_to_json(cfg);
  const std::size_t n = a.space.size();
  std::vector<Verdict> parts;
  if (opt.relation == "confidence") {
    const auto beh = more_confident_behavioral(a.oracle(), b.oracle(), cfg);
    const auto prizes = range_or_list(opt.prizes, "--prizes");
    const auto grid = comparison_grid(n, opt);
    const auto par = more_confident_parametric(a.cost, a.utility, b.cost, b.utility, grid, prizes);
    r.config["prizes"] = prizes;
    r.config["grid_points"] = grid.size();
    r.result["behavioral"] = io::order_verdict_to_json(beh);
    r.result["parametric"] = io::order_verdict_to_json(par);
    parts = {beh.verdict, par.verdict};
  } else {
    const auto beh = more_optimistic_behavioral(a.oracle(), b.oracle(), cfg);
    const auto grid = simplex_grid(n, resolution_or(opt, 20));
    const auto up = is_upshifted(a.cost, b.cost, grid, 1e-9, opt.pair_resolution);
    r.config["grid_points"] = grid.size();
    r.result["behavioral"] = io::order_verdict_to_json(beh);
    r.result["upshift"] = io::order_verdict_to_json(up);
    // The behavioural/up-shift equivalence is only established for unbounded u.
    r.result["utilities_unbounded"] = a.utility.unbounded() && b.utility.unbounded();
    parts = {beh.verdict, up.verdict};
    if (a.utility == b.utility) {
      const auto lem = lemma_b_check(a.cost, b.cost, cfg);
      r.result["conjugate_order"] = io::order_verdict_to_json(lem);
      parts.push_back(lem.verdict);
    }
  }
  Verdict overall = Verdict::holds;
  for (Verdict v : parts) {
    if (v == Verdict::fails) overall = Verdict::fails;
    else if (v == Verdict::inconclusive && overall == Verdict::holds) overall = Verdict::inconclusive;
  }
  bool agree = true;
  for (Verdict v : parts)
    for (Verdict w : parts)
      if (v != Verdict::inconclusive && w != Verdict::inconclusive && v != w) agree = false;
  r.result["verdict"] = io::verdict_name(overall);
  r.result["routes_agree"] = agree;
  const std::string adjective = opt.relation == "confidence" ? "confident" : "optimistic";
  r.summary = "a more " + adjective + " than b: " + io::verdict_name(overall) +
              (agree ? "" : " (behavioural and parametric routes disagree)");
  return exit_for(overall);
}

int cmd_fosd(const Options& opt, Report& r) {
  const auto p = parse_probs(opt.p, "--p");
  const auto q = parse_probs(opt.q, "--q");
  if (p.size() != q.size()) throw InputError("--q: dimension differs from --p");
  const bool holds = fosd(p, q);
  r.config["p"] = io::point_to_json(p);
  r.config["q"] = io::point_to_json(q);
  r.result["verdict"] = holds ? "holds" : "fails";
  r.result["join"] = io::point_to_json(fosd_join(p, q));
  r.result["meet"] = io::point_to_json(fosd_meet(p, q));
  r.summary = holds ? "holds" : "fails";
  return holds ? kPass : kViolation;
}

int cmd_upshift(const Options& opt, Report& r) {
  const auto c = load_cost(opt.c);
  const auto c2 = load_cost(opt.c2);
  if (c.dimension() != c2.dimension()) throw InputError("--c2: dimension differs from --c");
  const auto grid = simplex_grid(c.dimension(), resolution_or(opt, 20));
  r.config["c"] = io::cost_to_json(c);
  r.config["c2"] = io::cost_to_json(c2);
  r.config["grid_points"] = grid.size();
  const auto v = is_upshifted(c, c2, grid, 1e-9, opt.pair_resolution);
  r.result = io::order_verdict_to_json(v);
  r.summary = std::string("c is up-shifted from c2: ") + io::verdict_name(v.verdict);
  return exit_for(v.verdict);
}

int cmd_levelsets(const Options& opt, Report& r) {
  const auto c = load_cost(opt.c);
  const auto c2 = load_cost(opt.c2);
  if (c.dimension() != c2.dimension()) throw InputError("--c2: dimension differs from --c");
  const auto ks = parse_list(opt.ks, "--k");
  const auto grid = simplex_grid(c.dimension(), resolution_or(opt, 100));
  r.config["c"] = io::cost_to_json(c);
  r.config["c2"] = io::cost_to_json(c2);
  r.config["k"] = ks;
  r.config["grid_points"] = grid.size();
  Json rows = Json::array();
  bool all = true;
  for (double k : ks) {
    if (!(k >= 0.0)) throw InputError("--k: levels must be >= 0");
    const bool ok = level_set_weak_order(c, c2, k, grid);
    all = all && ok;
    rows.push_back({{"k", k},
                    {"dominated", ok},
                    {"size_c", level_set(c, k, grid).points.size()},
                    {"size_c2", level_set(c2, k, grid).points.size()}});
  }
  r.result["levels"] = rows;
  r.result["verdict"] = all ? "holds" : "fails";
  r.summary = all ? "every level set of c is dominated by c2's" : "some level set of c is not dominated";
  return all ? kPass : kViolation;
}

int cmd_assess_absolute(const Options& opt, Report& r) {
  const auto c = load_cost(opt.c);
  const auto cs = load_cost(opt.c_star);
  if (c.dimension() != cs.dimension()) throw InputError("--c-star: dimension differs from --c");
  const auto grid = simplex_grid(c.dimension(), resolution_or(opt, 100));
  r.config["c"] = io::cost_to_json(c);
  r.config["c_star"] = io::cost_to_json(cs);
  r.config["grid_points"] = grid.size();
  const auto a = absolute_assess(c, cs, grid);
  r.result["overconfident"] = a.overconfident;
  r.result["optimistic"] = a.optimistic;
  r.summary = std::string(a.overconfident ? "overconfident" : "not overconfident") + ", " +
              (a.optimistic ? "optimistic" : "not optimistic");
  return kPass;
}

int cmd_figures(const Options& opt, std::ostream& out) {
  const bool as = !opt.alpha_sweep_arg.empty();
  const bool bs = !opt.beta_sweep_arg.empty();
  if (as == bs) throw InputError("figures: give exactly one of --alpha-sweep or --beta-sweep");
  if (opt.points < 2) throw InputError("--points: need at least 2");
  CurveTable t;
  try {
    t = as ? alpha_sweep(parse_range(opt.alpha_sweep_arg), opt.beta, opt.points)
           : beta_sweep(parse_range(opt.beta_sweep_arg), opt.alpha, opt.points);
  } catch (const Error& e) {
    throw InputError(std::string(as ? "--alpha-sweep: " : "--beta-sweep: ") + e.what());
  }
  out << to_csv(t);
  return kPass;
}

int cmd_certify(const Options& opt, Report& r, std::ostream& err) {
  AcceptanceOptions a;
  a.seed = opt.certify_seed;
  a.jobs = opt.certify_jobs == 0 ? 1 : opt.certify_jobs;
  a.only = opt.only;
  for (int id : a.only)
    if (id < 1 || id > kCriterionCount) throw InputError("--only: criterion ids run from 1 to 8");
  r.config["seed"] = a.seed;
  r.config["only"] = a.only;
  Json rows = Json::array();
  std::size_t passed = 0;
  const auto results = run_acceptance(a);
  for (const auto& c : results) {
    err << format_result(c) << "\n";
    rows.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (c.passed) ++passed;
  }
  r.result["criteria"] = rows;
  r.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria pass";
  return passed == results.size() ? kPass : kViolation;
}

int cmd_verify(const Options& opt, Report& r) {
  const Json rep = io::read_json_file(opt.report);
  const auto checks = verify_report(rep);
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json j = c.detail;
    j["witness"] = c.what;
    j["reverified"] = c.ok;
    rows.push_back(j);
    all = all && c.ok;
  }
  r.config["report"] = opt.report;
  r.config["report_command"] = rep["command"];
  r.result["witnesses"] = rows;
  r.summary = std::to_string(checks.size()) + " witness(es), " + (all ? "all re-verify" : "some do not re-verify");
  return all ? kPass : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parsimonious moral-hazard preferences: valuation, identification and falsification"};
  app.name("mhp");
  app.require_subcommand(1);
  Options opt;

  auto* eval = app.add_subcommand("eval", "value, certainty equivalent and optimal efforts of a contract");
  eval->add_option("--model", opt.model, "model JSON")->required();
  eval->add_option("--contract", opt.contract, "contract JSON file or inline JSON")->required();

  auto* reduce = app.add_subcommand("reduce", "reduce a standard effort model to a grid cost");
  reduce->add_option("--standard", opt.standard, "standard model JSON")->required();
  reduce->add_option("--grid-resolution", opt.grid_resolution, "simplex grid resolution (default 20)");

  auto* identify = app.add_subcommand("identify", "recover u and c from a model used as a choice oracle");
  identify->add_option("--model", opt.model, "model JSON")->required();
  identify->add_option("--prizes", opt.prizes, "prize grid lo:step:hi or list")->capture_default_str();
  identify->add_option("--lattice-bound", opt.lattice_bound, "utility lattice bound")->capture_default_str();
  identify->add_option("--lattice-step", opt.lattice_step, "utility lattice step")->capture_default_str();
  identify->add_option("--grid-resolution", opt.grid_resolution, "effort grid resolution");

  auto* axioms = app.add_subcommand("check-axioms", "search for axiom violations");
  axioms->add_option("--model", opt.model, "model JSON")->required();
  axioms->add_option("--axiom", opt.axiom, "axiom name, comma list, or 'all'")->capture_default_str();
  opt.sampling.attach(axioms);

  auto* dataset = app.add_subcommand("check-dataset", "consistency of recorded choices");
  dataset->add_option("--dataset", opt.dataset, "dataset JSON")->required();
  dataset->add_option("--model", opt.model, "model JSON supplying the output space");

  auto* compare = app.add_subcommand("compare", "is model a more confident / more optimistic than model b");
  compare->add_option("relation", opt.relation, "confidence or optimism")
      ->required()
      ->check(CLI::IsMember({"confidence", "optimism"}));
  compare->add_option("--a", opt.a, "model JSON")->required();
  compare->add_option("--b", opt.b, "model JSON")->required();
  compare->add_option("--prizes", opt.prizes, "prize grid for the utility check")->capture_default_str();
  compare->add_option("--grid-resolution", opt.grid_resolution, "effort grid resolution");
  compare->add_option("--pair-resolution", opt.pair_resolution, "search resolution per pair")->capture_default_str();
  opt.sampling.attach(compare);

  auto* fosd_cmd = app.add_subcommand("fosd", "first-order stochastic dominance of p over q");
  fosd_cmd->add_option("--p", opt.p, "comma-separated probabilities")->required();
  fosd_cmd->add_option("--q", opt.q, "comma-separated probabilities")->required();

  auto* upshift = app.add_subcommand("upshift", "is c up-shifted from c2");
  upshift->add_option("--c", opt.c, "cost or model JSON")->required();
  upshift->add_option("--c2", opt.c2, "cost or model JSON")->required();
  upshift->add_option("--grid-resolution", opt.grid_resolution, "pair grid resolution (default 20)");
  upshift->add_option("--pair-resolution", opt.pair_resolution, "search resolution per pair")->capture_default_str();

  auto* levelsets = app.add_subcommand("levelsets", "level-set dominance of c by c2");
  levelsets->add_option("--c", opt.c, "cost or model JSON")->required();
  levelsets->add_option("--c2", opt.c2, "cost or model JSON")->required();
  levelsets->add_option("--k", opt.ks, "comma-separated levels")->capture_default_str();
  levelsets->add_option("--grid-resolution", opt.grid_resolution, "grid resolution (default 100)");

  auto* absolute = app.add_subcommand("assess-absolute", "overconfidence and optimism against a true cost");
  absolute->add_option("--c", opt.c, "subjective cost or model JSON")->required();
  absolute->add_option("--c-star", opt.c_star, "true cost or model JSON")->required();
  absolute->add_option("--grid-resolution", opt.grid_resolution, "grid resolution (default 100)");

  auto* figures = app.add_subcommand("figures", "CSV of quadratic cost curves");
  figures->add_option("--alpha-sweep", opt.alpha_sweep_arg, "alpha range lo:step:hi");
  figures->add_option("--beta-sweep", opt.beta_sweep_arg, "beta range lo:step:hi");
  figures->add_option("--alpha", opt.alpha, "alpha for a beta sweep")->capture_default_str();
  figures->add_option("--beta", opt.beta, "beta for an alpha sweep")->capture_default_str();
  figures->add_option("--points", opt.points, "p-grid points")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "run the acceptance suite");
  certify->add_option("--seed", opt.certify_seed, "base seed")->capture_default_str();
  certify->add_option("--jobs", opt.certify_jobs, "worker threads")->capture_default_str();
  certify->add_option("--only", opt.only, "criterion ids")->delimiter(',');

  auto* verify = app.add_subcommand("verify-witness", "re-check every witness in a report");
  verify->add_option("--report", opt.report, "report JSON")->required();

  std::vector<std::string> storage{"mhp"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }

  Report r;
  int code = kPass;
  try {
    CLI::App* sub = app.get_subcommands().front();
    r.command = sub->get_name();
    if (sub == figures) return cmd_figures(opt, out);
    if (sub == eval) code = cmd_eval(opt, r);
    else if (sub == reduce) code = cmd_reduce(opt, r);
    else if (sub == identify) code = cmd_identify(opt, r);
    else if (sub == axioms) code = cmd_check_axioms(opt, r);
    else if (sub == dataset) code = cmd_check_dataset(opt, r);
    else if (sub == compare) code = cmd_compare(opt, r);
    else if (sub == fosd_cmd) code = cmd_fosd(opt, r);
    else if (sub == upshift) code = cmd_upshift(opt, r);
    else if (sub == levelsets) code = cmd_levelsets(opt, r);
    else if (sub == absolute) code = cmd_assess_absolute(opt, r);
    else if (sub == certify) code = cmd_certify(opt, r, err);
    else code = cmd_verify(opt, r);
  } catch (const IdentificationError& e) {
    err << "mhp " << r.command << ": " << e.what() << " (prizes " << e.prize_low() << " and " << e.prize_high()
        << ")\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "mhp " << r.command << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "mhp " << r.command << ": " << e.what() << "\n";
    return kInputError;
  }
  emit(out, r, args);
  if (!r.summary.empty()) err << r.command << ": " << r.summary << "\n";
  return code;
}

}  // namespace mhp::cli
