#include "mhp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "mhp/axioms.hpp"
#include "mhp/comparators.hpp"
#include "mhp/errors.hpp"
#include "mhp/figures.hpp"
#include "mhp/identification.hpp"
#include "mhp/lp.hpp"
#include "mhp/lp_fixtures.hpp"
#include "mhp/oracle.hpp"
#include "mhp/reduction.hpp"

namespace mhp {

namespace {

constexpr double kFigureTol = 1e-12;
constexpr double kRecoverUTol = 1e-3;
constexpr double kRecoverCTol = 1e-2;
constexpr double kRoundTripTol = 1e-9;
constexpr double kDualityTol = 1e-9;
constexpr double kLpTol = 1e-9;
constexpr double kWitnessMargin = 1e-6;
constexpr double kWitnessReproduce = 1e-9;
constexpr double kSeparationGap = 0.05;
constexpr std::size_t kPassSamples = 10'000;
constexpr std::size_t kSearchSamples = 100'000;

// Collects failures; the criterion passes when none were recorded.
class Ledger {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream out;
    out << (checks_ - failed_) << "/" << checks_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& f : failures_) out << "; FAILED " << f;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

SamplerConfig sampler(std::uint64_t seed, std::size_t n, unsigned jobs) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  cfg.jobs = jobs;
  return cfg;
}

PreferenceOracle mh(const CostFunction& c, const UtilityFunction& u = UtilityFunction::linear()) {
  return PreferenceOracle::moral_hazard(OutputSpace::indexed(c.dimension()), c, u);
}

double random_quadratic_alpha(Rng& rng) {
  static constexpr double kAlphas[] = {0.5, 1.0, 2.0, 4.0};
  return kAlphas[rng.index(4)];
}
double random_quadratic_beta(Rng& rng) { return static_cast<double>(rng.index(11)) / 10.0; }

// All-finite grid cost on simplex_grid(n, m) with values in [0, scale] and a
// zero at a random point.
CostFunction random_grid_cost(Rng& rng, std::size_t n, std::size_t m, double scale) {
  const auto grid = simplex_grid(n, m);
  const std::size_t zero = rng.index(grid.size());
  std::vector<CostPoint> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back({grid[i], i == zero ? 0.0 : rng.uniform(0.0, scale)});
  return CostFunction::grid(std::move(pts));
}

CostFunction scaled(const CostFunction& c, double s) {
  if (c.form() == CostForm::quadratic1d) return CostFunction::quadratic1d(s * c.alpha(), c.beta());
  std::vector<CostPoint> pts(c.points().begin(), c.points().end());
  for (auto& p : pts) p.value *= s;
  return CostFunction::grid(std::move(pts));
}

SimplexPoint random_simplex_point(Rng& rng, std::size_t n) {
  std::vector<double> cuts(n - 1);
  for (double& x : cuts) x = rng.uniform01();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> p(n);
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  p[n - 1] = 1.0 - prev;
  return SimplexPoint(std::move(p));
}

std::vector<double> prize_grid() { return parse_range("-5:0.5:5"); }

// ---------------------------------------------------------------------------

void quadratic_families(Ledger& L, const AcceptanceOptions& opt, std::uint64_t seed) {
  struct Sweep {
    CurveTable table;
    std::vector<double> alphas;
    std::vector<double> betas;
  };
  const auto a_range = parse_range("1.0:0.1:5");
  const auto b_range = parse_range("0:0.1:1");
  std::vector<Sweep> sweeps;
  sweeps.push_back({alpha_sweep(a_range, 0.45), a_range, std::vector<double>(a_range.size(), 0.45)});
  sweeps.push_back({beta_sweep(b_range, 1.0), std::vector<double>(b_range.size(), 1.0), b_range});
  for (const auto& s : sweeps) {
    // Parse the emitted CSV back and compare with the closed form.
    std::istringstream in(to_csv(s.table));
    std::string line;
    std::getline(in, line);
    double worst = 0.0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      std::vector<double> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(std::strtod(cell.c_str(), nullptr));
      const double p = static_cast<double>(rows) / 100.0;
      L.require(cells.size() == s.alphas.size() + 1, "csv row width");
      worst = std::max(worst, std::abs(cells[0] - p));
      for (std::size_t j = 0; j < s.alphas.size() && j + 1 < cells.size(); ++j) {
        const double d = p - s.betas[j];
        worst = std::max(worst, std::abs(cells[j + 1] - s.alphas[j] * d * d));
      }
      ++rows;
    }
    L.require(rows == 101, "csv has 101 grid rows");
    L.require(worst <= kFigureTol, "curve values within 1e-12 (worst " + num(worst) + ")");
  }

  const auto grid = simplex_grid(2, 100);
  const auto prizes = prize_grid();
  const auto u = UtilityFunction::linear();
  struct Pair {
    double a_alpha, a_beta, b_alpha, b_beta;
  };
  const Pair confident[] = {{0.5, 0.5, 1.0, 0.5}, {1.0, 0.3, 2.0, 0.3}, {2.0, 0.7, 4.0, 0.7}, {0.5, 0.0, 4.0, 0.0}};
  int k = 0;
  for (const auto& f : confident) {
    const auto ca = CostFunction::quadratic1d(f.a_alpha, f.a_beta);
    const auto cb = CostFunction::quadratic1d(f.b_alpha, f.b_beta);
    const std::string tag = "alpha " + num(f.a_alpha) + " vs " + num(f.b_alpha);
    L.require(more_confident_parametric(ca, u, cb, u, grid, prizes).holds(), tag + ": parametric confidence");
    const auto v = more_confident_behavioral(mh(ca), mh(cb), sampler(seed + k++, kPassSamples, opt.jobs));
    L.require(v.holds(), tag + ": behavioural confidence");
  }
  const Pair optimistic[] = {{1.0, 0.7, 1.0, 0.3}, {2.0, 0.6, 2.0, 0.4}, {0.5, 0.9, 0.5, 0.5}, {4.0, 0.5, 4.0, 0.0}};
  const auto ugrid = simplex_grid(2, 20);
  for (const auto& f : optimistic) {
    const auto ca = CostFunction::quadratic1d(f.a_alpha, f.a_beta);
    const auto cb = CostFunction::quadratic1d(f.b_alpha, f.b_beta);
    const std::string tag = "beta " + num(f.a_beta) + " vs " + num(f.b_beta);
    L.require(is_upshifted(ca, cb, ugrid).holds(), tag + ": up-shift");
    const auto v = more_optimistic_behavioral(mh(ca), mh(cb), sampler(seed + k++, kPassSamples, opt.jobs));
    L.require(v.holds(), tag + ": behavioural optimism");
  }
}

void axiomatisation(Ledger& L, const AcceptanceOptions& opt, std::uint64_t seed) {
  std::vector<CostPoint> pts;
  for (const auto& p : simplex_grid(3, 4)) {
    const double d0 = p[0] - 0.25, d1 = p[1] - 0.25, d2 = p[2] - 0.5;
    pts.push_back({p, 2.0 * (d0 * d0 + d1 * d1 + d2 * d2)});
  }
  const auto quad = CostFunction::quadratic1d(1.0, 0.5);
  const std::vector<std::pair<std::string, PreferenceOracle>> passing = {
      {"quadratic/linear", mh(quad)},
      {"quadratic/cara", mh(quad, UtilityFunction::cara(1.0))},
      {"grid3/cara", PreferenceOracle::moral_hazard(OutputSpace({0.0, 1.0, 2.0}), CostFunction::grid(pts),
                                                    UtilityFunction::cara(0.5))},
  };
  std::size_t n = 0;
  for (const auto& [name, o] : passing)
    for (Axiom a : kAllAxioms) {
      const auto v = check_axiom(o, a, sampler(seed + n++, kPassSamples, opt.jobs));
      L.require(v.passed && v.samples == kPassSamples,
                name + " " + std::string(axiom_name(a)) + " (" +
                    (v.witness ? "margin " + num(v.witness->margin) : "samples " + std::to_string(v.samples)) + ")");
    }

  const auto space = OutputSpace::indexed(2);
  const auto u = UtilityFunction::linear();
  const std::vector<std::tuple<std::string, PreferenceOracle, Axiom>> failing = {
      {"malevolent", PreferenceOracle::malevolent(space, quad, u), Axiom::quasiconvexity},
      {"income effects", PreferenceOracle::income_effects(space, quad, u, 5.0), Axiom::mmr_independence},
  };
  for (const auto& [name, o, a] : failing) {
    const auto v = check_axiom(o, a, sampler(seed + n++, kSearchSamples, opt.jobs));
    L.require(!v.passed && v.witness.has_value(), name + " violates " + std::string(axiom_name(a)));
    if (!v.witness) continue;
    const auto again = reverify_axiom_witness(o, a, *v.witness);
    L.require(v.witness->margin >= kWitnessMargin, name + " witness margin >= 1e-6");
    L.require(again.has_value() && std::abs(*again - v.witness->margin) <= kWitnessReproduce,
              name + " witness re-verifies");
    L.note(name + " witness after " + std::to_string(v.samples) + " samples, margin " + num(v.witness->margin));
  }
}

void identification(Ledger& L, const AcceptanceOptions&, std::uint64_t) {
  IdentificationConfig cfg;
  cfg.prize_grid = prize_grid();
  const auto c = CostFunction::quadratic1d(1.0, 0.5);
  for (const auto& truth : {UtilityFunction::linear(), UtilityFunction::cara(1.0)}) {
    const auto rec = recover_u(mh(c, truth), cfg);
    double worst = 0.0;
    for (double x : cfg.prize_grid) worst = std::max(worst, std::abs(rec(x) - truth(x)));
    L.require(cfg.prize_grid.size() == 21 && worst <= kRecoverUTol,
              std::string(truth.kind() == UtilityKind::linear ? "linear" : "cara") + " u sup error " + num(worst));
  }

  const auto oracle = mh(CostFunction::quadratic1d(1.0, 0.0));
  const auto u = recover_u(oracle, cfg);
  cfg.p_grid = simplex_grid(2, 20);
  std::vector<double> previous;
  for (double step : {0.4, 0.2, 0.1, 0.05}) {
    cfg.f_grid = utility_lattice(2, 4.0, step);
    const auto values = recover_c_values(oracle, u, cfg);
    if (step == 0.1) {
      const double mid = values[10];
      L.require(std::abs(mid - 0.25) <= kRecoverCTol, "c hat at p = 0.5 is " + num(mid));
      L.note("c hat(0.5) = " + num(mid));
    }
    if (!previous.empty()) {
      bool monotone = true;
      for (std::size_t i = 0; i < values.size(); ++i) monotone = monotone && values[i] >= previous[i];
      L.require(monotone, "refining the f grid to step " + num(step) + " never lowers c hat");
    }
    previous = values;
  }
  const auto c_hat = recover_c(oracle, u, cfg);
  L.require(std::abs(cost_at(c_hat, SimplexPoint::binary(0.5)) - 0.25) <= kRecoverCTol, "recovered cost at 0.5");
}

void reduction(Ledger& L, const AcceptanceOptions&, std::uint64_t seed) {
  // Direct-choice models: efforts are distributions, C = c, P = identity.
  struct Direct {
    std::size_t n, m;
  };
  for (const auto& d : {Direct{2, 20}, Direct{3, 6}}) {
    const auto grid = simplex_grid(d.n, d.m);
    StandardModel model;
    std::vector<double> raw;
    for (const auto& p : grid) {
      double v = 0.0;
      for (std::size_t i = 0; i < d.n; ++i) {
        const double x = p[i] - 0.2 * static_cast<double>(i + 1) / static_cast<double>(d.n);
        v += 1.5 * x * x * static_cast<double>(i + 1);
      }
      raw.push_back(v);
    }
    const double lowest = *std::min_element(raw.begin(), raw.end());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      model.efforts.push_back("e" + std::to_string(j));
      model.costs.push_back(raw[j] - lowest);
      model.beliefs.push_back(grid[j]);
    }
    const auto reduced = reduce_standard(model, grid);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
      worst = std::max(worst, std::abs(cost_at(reduced, grid[j]) - model.costs[j]));
    L.require(worst <= kRoundTripTol, "direct-choice n=" + std::to_string(d.n) + " round trip error " + num(worst));
  }

  Rng rng(seed);
  SamplerConfig cfg;
  double worst = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t n = 2 + rng.index(2);
    const std::size_t e = 1 + rng.index(20);
    StandardModel model;
    const std::size_t zero = rng.index(e);
    for (std::size_t j = 0; j < e; ++j) {
      model.efforts.push_back("e" + std::to_string(j));
      model.costs.push_back(j == zero ? 0.0 : rng.uniform(0.0, 2.0));
      model.beliefs.push_back(rng.bernoulli(0.2) ? SimplexPoint::vertex(n, rng.index(n)) : random_simplex_point(rng, n));
    }
    const auto oracle = mh(reduce_standard(model, simplex_grid(n, 4)));
    for (int t = 0; t < 5; ++t) {
      const Contract w = random_contract(rng, oracle.space(), cfg);
      const auto f = utility_vector(oracle.utility(), w);
      LinearProgram lp;
      lp.constraints.assign(1, std::vector<double>(e, 1.0));
      lp.rhs = {1.0};
      for (std::size_t j = 0; j < e; ++j) lp.objective.push_back(model.costs[j] - dot(f, model.beliefs[j]));
      const auto r = solve_lp(lp);
      const double lp_value = -r.value;
      const double err = std::abs(value(oracle, w) - lp_value);
      worst = std::max(worst, err);
      L.require(r.status == LpStatus::optimal && err <= kRoundTripTol, "instance " + std::to_string(inst) + " valuation error " + num(err));
    }
  }
  L.note("100 instances, worst valuation error " + num(worst));
}

void confidence(Ledger& L, const AcceptanceOptions& opt, std::uint64_t seed) {
  Rng rng(seed);
  const auto u = UtilityFunction::linear();
  const auto prizes = prize_grid();
  std::size_t holds = 0, separated = 0, borderline = 0;
  for (int i = 0; i < 50; ++i) {
    const bool by_construction = i % 4 < 2;
    CostFunction ca = CostFunction::quadratic1d(1.0, 0.5);
    CostFunction cb = ca;
    std::vector<SimplexPoint> points;
    if (i % 2 == 0) {
      cb = CostFunction::quadratic1d(random_quadratic_alpha(rng), random_quadratic_beta(rng));
      ca = by_construction ? scaled(cb, 0.25 * static_cast<double>(1 + rng.index(4)))
                           : CostFunction::quadratic1d(random_quadratic_alpha(rng), random_quadratic_beta(rng));
      points = simplex_grid(2, 100);
    } else {
      const std::size_t n = 2 + rng.index(2);
      const std::size_t m = n == 2 ? 10 : 5;
      cb = random_grid_cost(rng, n, m, 1.0);
      ca = by_construction ? scaled(cb, 0.25 * static_cast<double>(1 + rng.index(3))) : random_grid_cost(rng, n, m, 1.0);
      points = simplex_grid(n, m);
    }
    const auto param = more_confident_parametric(ca, u, cb, u, points, prizes);
    const std::string tag = "pair " + std::to_string(i);
    const std::uint64_t s = seed + 1000 + static_cast<std::uint64_t>(i);
    if (param.holds()) {
      ++holds;
      const auto v = more_confident_behavioral(mh(ca), mh(cb), sampler(s, kPassSamples, opt.jobs));
      L.require(v.holds(), tag + ": parametric holds but behavioural " +
                               (v.witness ? "found a witness" : std::string("is inconclusive")));
      continue;
    }
    const double gap = param.witness->values.size() == 3 ? param.witness->values[2] : 0.0;
    if (gap < kSeparationGap) {
      ++borderline;
      continue;
    }
    ++separated;
    const auto v = more_confident_behavioral(mh(ca), mh(cb), sampler(s, kSearchSamples, opt.jobs));
    L.require(v.verdict == Verdict::fails && v.witness, tag + ": gap " + num(gap) + " but no behavioural witness");
    if (v.witness) {
      const auto again = reverify_confidence_witness(mh(ca), mh(cb), *v.witness);
      L.require(again.has_value(), tag + ": witness re-verifies");
    }
  }
  L.note(std::to_string(holds) + " dominated pairs, " + std::to_string(separated) + " separated, " +
         std::to_string(borderline) + " below the 0.05 gap");
}

void optimism(Ledger& L, const AcceptanceOptions& opt, std::uint64_t seed) {
  Rng rng(seed);
  const auto ugrid = simplex_grid(2, 20);
  const auto lgrid = simplex_grid(2, 100);
  std::size_t up = 0, not_up = 0;
  for (int i = 0; i < 50; ++i) {
    const auto ca = CostFunction::quadratic1d(random_quadratic_alpha(rng), random_quadratic_beta(rng));
    const auto cb = CostFunction::quadratic1d(random_quadratic_alpha(rng), random_quadratic_beta(rng));
    const auto shift = is_upshifted(ca, cb, ugrid);
    const bool holds = shift.holds();
    (holds ? up : not_up)++;
    const std::size_t n = holds ? kPassSamples : kSearchSamples;
    const std::uint64_t s = seed + 1000 + 2 * static_cast<std::uint64_t>(i);
    const auto beh = more_optimistic_behavioral(mh(ca), mh(cb), sampler(s, n, opt.jobs));
    const auto lem = lemma_b_check(ca, cb, sampler(s + 1, n, opt.jobs));
    const std::string tag = "pair " + std::to_string(i) + " (" + num(ca.alpha()) + "," + num(ca.beta()) + " vs " +
                            num(cb.alpha()) + "," + num(cb.beta()) + ")";
    const Verdict want = holds ? Verdict::holds : Verdict::fails;
    L.require(beh.verdict == want, tag + ": behavioural optimism " + (holds ? "should pass" : "should fail"));
    L.require(lem.verdict == want, tag + ": conjugate-order check " + (holds ? "should pass" : "should fail"));
    if (beh.witness) L.require(reverify_optimism_witness(mh(ca), mh(cb), *beh.witness).has_value(), tag + ": witness re-verifies");
    if (holds)
      for (double k : {0.01, 0.04, 0.09, 0.25})
        L.require(level_set_weak_order(ca, cb, k, lgrid), tag + ": level sets at k=" + num(k));
  }
  L.note(std::to_string(up) + " up-shifted pairs, " + std::to_string(not_up) + " not");
}

void duality(Ledger& L, const AcceptanceOptions&, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  double worst_fenchel = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto c = random_grid_cost(rng, n, n == 2 ? 10 : 5, 1.0);
    const double scale = lipschitz_scale(c);
    auto f_grid = utility_lattice(n, std::ceil(scale) + 1.0, 0.5);
    for (auto& g : supporting_slopes(c)) f_grid.push_back(std::move(g));
    for (const auto& cp : c.points()) {
      const double err = std::abs(biconjugate(c, f_grid, cp.p) - cost_at(c, cp.p));
      worst = std::max(worst, err);
      L.require(err <= kDualityTol, "cost " + std::to_string(i) + " biconjugate error " + num(err));
    }
    for (int t = 0; t < 500; ++t) {
      std::vector<double> f(n);
      for (double& x : f) x = rng.uniform(-5.0, 5.0);
      const auto p = random_simplex_point(rng, n);
      const double slack = conjugate(c, f) - (dot(f, p) - cost_at(c, p));
      worst_fenchel = std::min(worst_fenchel, slack);
      L.require(slack >= -kDualityTol, "cost " + std::to_string(i) + " Fenchel inequality");
    }
  }
  L.note("worst biconjugate error " + num(worst) + ", most negative Fenchel slack " + num(worst_fenchel));
}

void lp_suite(Ledger& L, const AcceptanceOptions&, std::uint64_t) {
  const auto& fx = lp_fixtures();
  L.require(fx.size() == 30, "30 fixtures");
  for (const auto& f : fx) {
    try {
      const auto r = solve_lp({f.objective, f.constraints, f.rhs});
      bool ok = r.status == f.status;
      if (ok && f.status == LpStatus::optimal) {
        ok = std::abs(r.value - f.value) <= kLpTol;
        for (std::size_t i = 0; ok && i < f.rhs.size(); ++i) {
          double lhs = 0.0;
          for (std::size_t j = 0; j < r.solution.size(); ++j) lhs += f.constraints[i][j] * r.solution[j];
          ok = std::abs(lhs - f.rhs[i]) <= kLpTol;
        }
        for (double x : r.solution) ok = ok && x >= -kLpTol;
      }
      L.require(ok, f.name);
    } catch (const std::exception& e) {
      L.require(false, f.name + " threw " + e.what());
    }
  }
  for (const char* name : {"beale_cycling", "beale_classic", "chvatal_cycling"})
    L.require(std::any_of(fx.begin(), fx.end(), [&](const LpFixture& f) { return f.name == name; }),
              std::string("cycling fixture ") + name + " present");
}

struct Entry {
  const char* name;
  void (*run)(Ledger&, const AcceptanceOptions&, std::uint64_t);
};

constexpr Entry kEntries[kCriterionCount] = {
    {"quadratic_cost_families", quadratic_families},   {"axiomatisation_direction", axiomatisation},
    {"identification", identification},    {"reduction_round_trip", reduction},
    {"confidence_equivalence", confidence}, {"optimism_equivalence", optimism},
    {"conjugate_duality", duality},         {"lp_solver_suite", lp_suite},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriterionCount) throw InputError("unknown criterion " + std::to_string(id));
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  Ledger L;
  try {
    e.run(L, opt, splitmix64(opt.seed + static_cast<std::uint64_t>(id)));
  } catch (const std::exception& ex) {
    L.require(false, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = L.ok();
  r.detail = L.detail();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    out.push_back(run_criterion(id, opt));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "[%s] %d %s (%.1f s): ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace mhp
