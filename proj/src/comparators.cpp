#include "mhp/comparators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mhp/errors.hpp"

namespace mhp {

namespace {

Contract sure(const OutputSpace& space, const Lottery& x) { return Contract::constant(space, x); }
Contract sure(const OutputSpace& space, double prize) { return sure(space, Lottery::degenerate(prize)); }

std::vector<double> cumulative(const SimplexPoint& p) {
  std::vector<double> out(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = acc += p[i];
  return out;
}

SimplexPoint from_cumulative(const std::vector<double>& cum) {
  std::vector<double> probs(cum.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < cum.size(); ++i) {
    const double c = (i + 1 == cum.size()) ? 1.0 : cum[i];
    probs[i] = std::max(0.0, c - prev);
    prev = c;
  }
  return SimplexPoint(std::move(probs));
}

// Weak and strict implication checks shared by the behavioural comparators:
// diff_b is the hypothesis difference, diff_a the conclusion difference.
std::optional<double> implication_failure(const std::string& form, double diff_b, double diff_a, double band,
                                          double margin, bool& hypothesis) {
  if (form == "weak") {
    if (diff_b < -band) return std::nullopt;
    hypothesis = true;
    if (diff_a < -margin) return -diff_a;
    return std::nullopt;
  }
  if (!(diff_b > margin)) return std::nullopt;
  hypothesis = true;
  if (diff_a <= band) return band - diff_a;
  return std::nullopt;
}

OrderVerdict finish(const SearchOutcome<OrderWitness>& out, const SamplerConfig& cfg) {
  OrderVerdict v;
  v.samples = out.samples_run;
  v.hypothesis_samples = out.hypothesis_count;
  v.witness = out.witness;
  if (out.witness)
    v.verdict = Verdict::fails;
  else if (out.hypothesis_count < cfg.min_hypothesis)
    v.verdict = Verdict::inconclusive;
  else
    v.verdict = Verdict::holds;
  return v;
}

// Shift every state of w by the utility amount k under u; nullopt when out of range.
std::optional<Contract> shifted(const UtilityFunction& u, const Contract& w, double k) {
  auto f = utility_vector(u, w);
  for (double& x : f) x += k;
  try {
    return contract_from_utility_vector(u, w.space(), f);
  } catch (const Error&) {
    return std::nullopt;
  }
}

constexpr double kInvPhi = 0.6180339887498949;

template <class H>
std::pair<double, double> golden_min(H&& h, double a, double b, double tol) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double h1 = h(x1);
  double h2 = h(x2);
  while (b - a > tol) {
    if (h1 > h2) {
      a = x1;
      x1 = x2;
      h1 = h2;
      x2 = a + kInvPhi * (b - a);
      h2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      h2 = h1;
      x1 = b - kInvPhi * (b - a);
      h1 = h(x1);
    }
  }
  return h1 <= h2 ? std::pair{x1, h1} : std::pair{x2, h2};
}

std::pair<double, double> finite_interval(const CostFunction& c) { return {c.finite_lo(), c.finite_hi()}; }

UpshiftPairResult upshift_two_levels(const CostFunction& c, const CostFunction& c2, double a, double b) {
  UpshiftPairResult r;
  r.reference_total = cost_at_high_mass(c, a) + cost_at_high_mass(c2, b);
  const double s = a + b;
  auto [lo1, hi1] = finite_interval(c);
  auto [lo2, hi2] = finite_interval(c2);
  double lo = std::max({b, s - 1.0, 0.0, lo1, s - hi2});
  double hi = std::min({1.0, s, hi1, s - lo2});
  auto total = [&](double x) {
    x = std::clamp(x, 0.0, 1.0);
    return cost_at_high_mass(c, x) + cost_at_high_mass(c2, std::clamp(s - x, 0.0, 1.0));
  };
  if (lo <= hi) {
    std::vector<double> cand{lo, hi, std::max(a, b), b};
    if (c.form() == CostForm::quadratic1d && c2.form() == CostForm::quadratic1d &&
        c.alpha() + c2.alpha() > 0.0)
      cand.push_back((c.alpha() * c.beta() + c2.alpha() * (s - c2.beta())) / (c.alpha() + c2.alpha()));
    if (c.form() == CostForm::grid)
      for (std::size_t j : c.finite_indices()) cand.push_back(c.points()[j].p.high_mass());
    if (c2.form() == CostForm::grid)
      for (std::size_t j : c2.finite_indices()) cand.push_back(s - c2.points()[j].p.high_mass());
    if (hi > lo) cand.push_back(golden_min(total, lo, hi, 1e-12).first);
    for (double x : cand) {
      if (x < lo || x > hi) continue;
      const double t = total(x);
      if (t < r.best_total) {
        r.best_total = t;
        r.q = SimplexPoint::binary(x);
        r.q2 = SimplexPoint::binary(std::clamp(s - x, 0.0, 1.0));
      }
    }
  } else if (std::isinf(r.reference_total)) {
    // No finite rearrangement exists; the swap q = p', q' = p is still feasible.
    r.q = SimplexPoint::binary(b);
    r.q2 = SimplexPoint::binary(a);
    r.best_total = r.reference_total;
  }
  return r;
}

bool feasible_rearrangement(const SimplexPoint& p, const SimplexPoint& p2, const SimplexPoint& q,
                            std::vector<double>& q2_out) {
  const std::size_t n = p.size();
  q2_out.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    q2_out[i] = p[i] + p2[i] - q[i];
    if (q2_out[i] < -1e-12) return false;
    q2_out[i] = std::max(0.0, q2_out[i]);
  }
  const SimplexPoint q2(q2_out);
  return fosd(p, q2) && fosd(q, p2);
}

}  // namespace

bool is_increasing_difference(std::span<const double> f, std::span<const double> f2, double tol) {
  if (f.size() != f2.size()) throw DomainError("is_increasing_difference: dimension mismatch");
  double running_max = -kInf;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = f[i] - f2[i];
    if (d < running_max - tol) return false;
    running_max = std::max(running_max, d);
  }
  return true;
}

bool is_steeper_by_comparisons(const PreferenceOracle& o, const Contract& w, const Contract& w2, double band) {
  if (!(w.space() == o.space()) || !(w2.space() == o.space()))
    throw DomainError("is_steeper: contracts are not on the oracle's output space");
  for (std::size_t s = 1; s < w.size(); ++s)
    for (std::size_t t = 0; t < s; ++t) {
      const Lottery left = Lottery::mix(0.5, w.at(s), w2.at(t));
      const Lottery right = Lottery::mix(0.5, w.at(t), w2.at(s));
      if (!weakly_prefers(o, sure(o.space(), left), sure(o.space(), right), band)) return false;
    }
  return true;
}

bool is_steeper(const PreferenceOracle& o, const Contract& w, const Contract& w2) {
  const bool by_comparisons = is_steeper_by_comparisons(o, w, w2);
  const auto f = utility_vector(o.utility(), w);
  const auto f2 = utility_vector(o.utility(), w2);
  const bool by_difference = is_increasing_difference(f, f2);
  if (by_comparisons != by_difference) throw std::logic_error("is_steeper: comparison and utility routes disagree");
  return by_comparisons;
}

OrderVerdict more_confident_behavioral(const PreferenceOracle& a, const PreferenceOracle& b,
                                       const SamplerConfig& cfg) {
  cfg.validate();
  if (!(a.space() == b.space())) throw DomainError("more_confident: oracles on different output spaces");
  const OutputSpace& space = a.space();
  auto trial = [&](Rng& rng, bool& hypothesis) -> std::optional<OrderWitness> {
    const Contract w = random_contract(rng, space, cfg);
    Contract x = sure(space, random_lottery(rng, cfg));
    const int mode = static_cast<int>(rng.index(3));
    const double delta = rng.uniform(1e-4, 0.5);
    if (mode > 0) {
      try {
        const double target = value(b, w) - (mode == 2 ? delta : 0.0);
        x = sure(space, b.utility().inverse(target));
      } catch (const Error&) {
      }
    }
    const double vbw = value(b, w);
    const double vbx = value(b, x);
    const double vaw = value(a, w);
    const double vax = value(a, x);
    for (const char* form : {"weak", "strict"}) {
      if (auto m = implication_failure(form, vbw - vbx, vaw - vax, cfg.band, cfg.violation_margin, hypothesis))
        return OrderWitness{form, {w, x}, {}, {}, {vbw, vbx, vaw, vax, *m}, std::nullopt};
    }
    return std::nullopt;
  };
  return finish(run_search<OrderWitness>(cfg, trial), cfg);
}

OrderVerdict more_confident_parametric(const CostFunction& ca, const UtilityFunction& ua, const CostFunction& cb,
                                       const UtilityFunction& ub, std::span<const SimplexPoint> points,
                                       std::span<const double> prizes, double tol) {
  if (ca.dimension() != cb.dimension()) throw DomainError("more_confident_parametric: dimension mismatch");
  OrderVerdict v;
  for (double pi : prizes) {
    ++v.samples;
    const double x = ua(pi);
    const double y = ub(pi);
    if (!(std::abs(x - y) <= tol)) {
      v.verdict = Verdict::fails;
      v.witness = OrderWitness{"utility", {}, {}, {}, {x, y}, pi};
      return v;
    }
  }
  for (const auto& p : points) {
    ++v.samples;
    const double x = cost_at(ca, p);
    const double y = cost_at(cb, p);
    if (x > y + tol) {
      v.verdict = Verdict::fails;
      v.witness = OrderWitness{"cost", {}, {p}, {}, {x, y, x - y}, std::nullopt};
      return v;
    }
  }
  return v;
}

SimplexPoint fosd_join(const SimplexPoint& p, const SimplexPoint& p2) {
  if (p.size() != p2.size()) throw DomainError("fosd_join: dimension mismatch");
  auto f = cumulative(p);
  const auto g = cumulative(p2);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::min(f[i], g[i]);
  return from_cumulative(f);
}

SimplexPoint fosd_meet(const SimplexPoint& p, const SimplexPoint& p2) {
  if (p.size() != p2.size()) throw DomainError("fosd_meet: dimension mismatch");
  auto f = cumulative(p);
  const auto g = cumulative(p2);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::max(f[i], g[i]);
  return from_cumulative(f);
}

UpshiftPairResult upshift_pair(const CostFunction& c, const CostFunction& c2, const SimplexPoint& p,
                               const SimplexPoint& p2, double tol, std::size_t resolution) {
  const std::size_t n = c.dimension();
  if (c2.dimension() != n || p.size() != n || p2.size() != n) throw DomainError("upshift_pair: dimension mismatch");
  UpshiftPairResult r;
  if (n == 1) {
    r.q = p;
    r.q2 = p2;
    r.best_total = r.reference_total = 0.0;
  } else if (n == 2) {
    r = upshift_two_levels(c, c2, p.high_mass(), p2.high_mass());
  } else {
    r.reference_total = cost_at(c, p) + cost_at(c2, p2);
    std::vector<SimplexPoint> cand{fosd_join(p, p2), p2, p};
    for (auto& q : simplex_grid(n, resolution)) cand.push_back(std::move(q));
    std::vector<double> q2;
    for (const auto& q : cand) {
      if (!feasible_rearrangement(p, p2, q, q2)) continue;
      const SimplexPoint q2p(q2);
      const double cq = cost_at(c, q);
      if (std::isinf(cq) && r.q) continue;
      const double t = cq + cost_at(c2, q2p);
      if (!r.q || t < r.best_total) {
        r.best_total = t;
        r.q = q;
        r.q2 = q2p;
      }
    }
  }
  if (std::isinf(r.reference_total) && r.q) {
    r.gap = std::isinf(r.best_total) ? 0.0 : -kInf;
    r.holds = true;
  } else {
    r.gap = r.best_total - r.reference_total;
    r.holds = r.q.has_value() && r.gap <= tol;
  }
  return r;
}

OrderVerdict is_upshifted(const CostFunction& c, const CostFunction& c2, std::span<const SimplexPoint> grid,
                          double tol, std::size_t resolution) {
  OrderVerdict v;
  for (const auto& p : grid)
    for (const auto& p2 : grid) {
      ++v.samples;
      const auto r = upshift_pair(c, c2, p, p2, tol, resolution);
      if (!r.holds) {
        v.verdict = Verdict::fails;
        v.witness = OrderWitness{"upshift", {}, {p, p2}, {}, {r.best_total, r.reference_total, r.gap}, std::nullopt};
        return v;
      }
    }
  return v;
}

LevelSets level_set(const CostFunction& c, double k, std::span<const SimplexPoint> grid, double tol) {
  if (!(k >= 0.0)) throw InputError("level_set: k must be >= 0");
  LevelSets out{k, {}};
  for (const auto& p : grid)
    if (cost_at(c, p) <= k + tol) out.points.push_back(p);
  return out;
}

bool level_set_weak_order(const CostFunction& c, const CostFunction& c2, double k,
                          std::span<const SimplexPoint> grid) {
  const auto l = level_set(c, k, grid);
  const auto l2 = level_set(c2, k, grid);
  for (const auto& p : l.points)
    if (std::none_of(l2.points.begin(), l2.points.end(), [&](const SimplexPoint& q) { return fosd(p, q); }))
      return false;
  for (const auto& q : l2.points)
    if (std::none_of(l.points.begin(), l.points.end(), [&](const SimplexPoint& p) { return fosd(p, q); }))
      return false;
  return true;
}

OrderVerdict more_optimistic_behavioral(const PreferenceOracle& a, const PreferenceOracle& b,
                                        const SamplerConfig& cfg) {
  cfg.validate();
  if (!(a.space() == b.space())) throw DomainError("more_optimistic: oracles on different output spaces");
  const OutputSpace& space = a.space();
  const std::size_t n = space.size();
  auto trial = [&](Rng& rng, bool& hypothesis) -> std::optional<OrderWitness> {
    Contract w = random_contract(rng, space, cfg);
    Contract w2 = random_contract(rng, space, cfg);
    if (rng.bernoulli(0.5) && n > 2) {
      std::vector<double> g(n);
      for (double& x : g) x = rng.uniform(0.0, 0.5 * (cfg.prize_hi - cfg.prize_lo));
      std::sort(g.begin(), g.end());
      auto f = utility_vector(a.utility(), w2);
      for (std::size_t i = 0; i < n; ++i) f[i] += g[i];
      try {
        w = contract_from_utility_vector(a.utility(), space, f);
      } catch (const Error&) {
      }
    }
    if (!is_steeper(a, w, w2)) std::swap(w, w2);
    const int mode = static_cast<int>(rng.index(3));
    const double delta = rng.uniform(1e-4, 0.5);
    if (mode > 0) {
      const double k = value(b, w) - value(b, w2) - (mode == 2 ? delta : 0.0);
      if (auto s = shifted(b.utility(), w2, k)) w2 = *s;
    }
    if (!is_steeper(a, w, w2)) return std::nullopt;
    const double vbw = value(b, w);
    const double vbw2 = value(b, w2);
    const double vaw = value(a, w);
    const double vaw2 = value(a, w2);
    for (const char* form : {"weak", "strict"}) {
      if (auto m = implication_failure(form, vbw - vbw2, vaw - vaw2, cfg.band, cfg.violation_margin, hypothesis))
        return OrderWitness{form, {w, w2}, {}, {}, {vbw, vbw2, vaw, vaw2, *m}, std::nullopt};
    }
    return std::nullopt;
  };
  return finish(run_search<OrderWitness>(cfg, trial), cfg);
}

OrderVerdict lemma_b_check(const CostFunction& c, const CostFunction& c2, const SamplerConfig& cfg) {
  cfg.validate();
  const std::size_t n = c.dimension();
  if (c2.dimension() != n) throw DomainError("lemma_b_check: dimension mismatch");
  auto trial = [&](Rng& rng, bool& hypothesis) -> std::optional<OrderWitness> {
    std::vector<double> f2(n);
    for (double& x : f2) x = rng.uniform(cfg.prize_lo, cfg.prize_hi);
    std::vector<double> g(n);
    for (double& x : g) x = rng.uniform(0.0, cfg.prize_hi - cfg.prize_lo);
    std::sort(g.begin(), g.end());
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = f2[i] + g[i];
    const int mode = static_cast<int>(rng.index(3));
    if (mode > 0) {
      const double k = conjugate(c2, f) - conjugate(c2, f2) - (mode == 2 ? rng.uniform(1e-4, 0.5) : 0.0);
      for (double& x : f2) x += k;
    }
    if (!is_increasing_difference(f, f2, 1e-12)) return std::nullopt;
    const double b1 = conjugate(c2, f);
    const double b2 = conjugate(c2, f2);
    const double a1 = conjugate(c, f);
    const double a2 = conjugate(c, f2);
    for (const char* form : {"weak", "strict"}) {
      if (auto m = implication_failure(form, b1 - b2, a1 - a2, cfg.band, cfg.violation_margin, hypothesis))
        return OrderWitness{form, {}, {}, {f, f2}, {b1, b2, a1, a2, *m}, std::nullopt};
    }
    return std::nullopt;
  };
  return finish(run_search<OrderWitness>(cfg, trial), cfg);
}

AbsoluteAssessment absolute_assess(const CostFunction& c, const CostFunction& c_star,
                                   std::span<const SimplexPoint> grid, double tol) {
  AbsoluteAssessment out;
  out.overconfident = std::all_of(grid.begin(), grid.end(),
                                  [&](const SimplexPoint& p) { return cost_at(c, p) <= cost_at(c_star, p) + tol; });
  out.optimistic = is_upshifted(c, c_star, grid, tol).holds();
  return out;
}

std::optional<double> reverify_confidence_witness(const PreferenceOracle& a, const PreferenceOracle& b,
                                                  const OrderWitness& w, double band, double violation_margin) {
  if (w.contracts.size() != 2 || !w.contracts[1].is_constant())
    throw InputError("confidence witness needs a contract and a constant contract");
  bool hypothesis = false;
  const auto m = implication_failure(w.note, value(b, w.contracts[0]) - value(b, w.contracts[1]),
                                     value(a, w.contracts[0]) - value(a, w.contracts[1]), band, violation_margin,
                                     hypothesis);
  return hypothesis ? m : std::nullopt;
}

std::optional<double> reverify_optimism_witness(const PreferenceOracle& a, const PreferenceOracle& b,
                                                const OrderWitness& w, double band, double violation_margin) {
  if (w.contracts.size() != 2) throw InputError("optimism witness needs two contracts");
  if (!is_steeper(a, w.contracts[0], w.contracts[1])) return std::nullopt;
  bool hypothesis = false;
  const auto m = implication_failure(w.note, value(b, w.contracts[0]) - value(b, w.contracts[1]),
                                     value(a, w.contracts[0]) - value(a, w.contracts[1]), band, violation_margin,
                                     hypothesis);
  return hypothesis ? m : std::nullopt;
}

std::optional<double> reverify_lemma_b_witness(const CostFunction& c, const CostFunction& c2, const OrderWitness& w,
                                               double band, double violation_margin) {
  if (w.vectors.size() != 2) throw InputError("lemma witness needs two utility vectors");
  const auto& f = w.vectors[0];
  const auto& f2 = w.vectors[1];
  if (!is_increasing_difference(f, f2, 1e-12)) return std::nullopt;
  bool hypothesis = false;
  const auto m = implication_failure(w.note, conjugate(c2, f) - conjugate(c2, f2), conjugate(c, f) - conjugate(c, f2),
                                     band, violation_margin, hypothesis);
  return hypothesis ? m : std::nullopt;
}

}  // namespace mhp
