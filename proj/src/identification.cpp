#include "mhp/identification.hpp"

#include <algorithm>
#include <cmath>

#include "mhp/errors.hpp"

namespace mhp {

namespace {

Contract sure(const OutputSpace& space, const Lottery& x) { return Contract::constant(space, x); }

// Smallest weight in [0,1] at which mixing(weight) is weakly preferred to the
// target, with mixing increasing in the weight.
template <class Mixture>
double bisect_weight(const PreferenceOracle& o, const Contract& target, Mixture mixing, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const Preference r = compare(o, mixing(mid), target);
    if (r == Preference::strictly_prefers)
      hi = mid;
    else if (r == Preference::strictly_dispreferred)
      lo = mid;
    else
      return mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void IdentificationConfig::validate() const {
  if (!(bisection_tol > 0.0) || !(ce_tol > 0.0)) throw InputError("identification: tolerances must be > 0");
}

UtilityFunction recover_u(const PreferenceOracle& o, const IdentificationConfig& cfg) {
  cfg.validate();
  if (cfg.prize_grid.empty()) throw InputError("identification: prize grid is empty");
  const OutputSpace& space = o.space();
  const double pi0 = o.utility().pi0();
  const double pi1 = o.utility().pi1();
  const Lottery d0 = Lottery::degenerate(pi0);
  const Lottery d1 = Lottery::degenerate(pi1);

  std::vector<double> prizes = cfg.prize_grid;
  prizes.push_back(pi0);
  prizes.push_back(pi1);
  std::sort(prizes.begin(), prizes.end());
  prizes.erase(std::unique(prizes.begin(), prizes.end()), prizes.end());

  for (std::size_t i = 1; i < prizes.size(); ++i) {
    const auto r = compare(o, sure(space, Lottery::degenerate(prizes[i])),
                           sure(space, Lottery::degenerate(prizes[i - 1])));
    if (r != Preference::strictly_prefers)
      throw IdentificationError("recover_u: a larger sure prize is not strictly preferred", prizes[i - 1],
                                prizes[i]);
  }

  std::vector<Knot> knots;
  knots.reserve(prizes.size());
  for (double pi : prizes) {
    double v;
    const Lottery dp = Lottery::degenerate(pi);
    if (pi == pi0) {
      v = 0.0;
    } else if (pi == pi1) {
      v = 1.0;
    } else if (pi > pi0 && pi < pi1) {
      v = bisect_weight(o, sure(space, dp),
                        [&](double l) { return sure(space, Lottery::mix(l, d1, d0)); }, cfg.bisection_tol);
    } else if (pi > pi1) {
      const double mu = bisect_weight(
          o, sure(space, d1), [&](double l) { return sure(space, Lottery::mix(l, dp, d0)); },
          cfg.bisection_tol);
      v = 1.0 / mu;
    } else {
      const double mu = bisect_weight(
          o, sure(space, d0), [&](double l) { return sure(space, Lottery::mix(l, d1, dp)); },
          cfg.bisection_tol);
      v = -mu / (1.0 - mu);
    }
    knots.push_back({pi, v});
  }
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i].value > knots[i - 1].value))
      throw IdentificationError("recover_u: recovered utilities are not strictly increasing",
                                knots[i - 1].prize, knots[i].prize);
  return UtilityFunction::piecewise_linear(std::move(knots), pi0, pi1);
}

double behavioral_certainty_equivalent(const PreferenceOracle& o, const Contract& w,
                                       const UtilityFunction& u, double tol) {
  const OutputSpace& space = o.space();
  double lo = w.at(0).min_prize();
  double hi = w.at(0).max_prize();
  for (std::size_t i = 1; i < w.size(); ++i) {
    lo = std::min(lo, w.at(i).min_prize());
    hi = std::max(hi, w.at(i).max_prize());
  }
  auto cmp = [&](double x) { return compare(o, sure(space, Lottery::degenerate(x)), w); };
  double width = std::max(1.0, hi - lo);
  for (int k = 0; cmp(lo) == Preference::strictly_prefers; ++k) {
    if (k == 200 || (u.has_bounded_domain() && lo <= u.domain_lo()))
      throw IdentificationError("certainty equivalent: no lower bracket", lo, hi);
    lo -= width;
    if (u.has_bounded_domain()) lo = std::max(lo, u.domain_lo());
    width *= 2.0;
  }
  width = std::max(1.0, hi - lo);
  for (int k = 0; cmp(hi) == Preference::strictly_dispreferred; ++k) {
    if (k == 200 || (u.has_bounded_domain() && hi >= u.domain_hi()))
      throw IdentificationError("certainty equivalent: no upper bracket", lo, hi);
    hi += width;
    if (u.has_bounded_domain()) hi = std::min(hi, u.domain_hi());
    width *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const Preference r = cmp(mid);
    if (r == Preference::strictly_prefers)
      hi = mid;
    else if (r == Preference::strictly_dispreferred)
      lo = mid;
    else
      return mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> recover_c_values(const PreferenceOracle& o, const UtilityFunction& u,
                                     const IdentificationConfig& cfg) {
  cfg.validate();
  if (!u.unbounded())
    throw PreconditionError("recover_c: the utility must be unbounded above and below");
  if (cfg.f_grid.empty() || cfg.p_grid.empty()) throw InputError("recover_c: f grid and p grid must be non-empty");
  const std::size_t n = o.space().size();
  std::vector<double> ce_utils;
  ce_utils.reserve(cfg.f_grid.size());
  for (const auto& f : cfg.f_grid) {
    if (f.size() != n) throw DomainError("recover_c: f grid vector has the wrong dimension");
    const Contract w = contract_from_utility_vector(u, o.space(), f);
    ce_utils.push_back(u(behavioral_certainty_equivalent(o, w, u, cfg.ce_tol)));
  }
  std::vector<double> out;
  out.reserve(cfg.p_grid.size());
  for (const auto& p : cfg.p_grid) {
    if (p.size() != n) throw DomainError("recover_c: p grid point has the wrong dimension");
    double best = -kInf;
    for (std::size_t j = 0; j < cfg.f_grid.size(); ++j) best = std::max(best, dot(cfg.f_grid[j], p) - ce_utils[j]);
    out.push_back(best);
  }
  return out;
}

CostFunction recover_c(const PreferenceOracle& o, const UtilityFunction& u, const IdentificationConfig& cfg) {
  auto values = recover_c_values(o, u, cfg);
  for (double& v : values) v = std::max(v, 0.0);
  const double lowest = *std::min_element(values.begin(), values.end());
  std::vector<CostPoint> points;
  points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) points.push_back({cfg.p_grid[i], values[i] - lowest});
  return CostFunction::grid(std::move(points));
}

std::vector<std::vector<double>> utility_lattice(std::size_t n, double bound, double step) {
  if (n == 0) throw InputError("utility_lattice: n must be >= 1");
  if (!(step > 0.0) || !(bound >= 0.0)) throw InputError("utility_lattice: need step > 0 and bound >= 0");
  const double ratio = bound / step;
  const long k_max = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(k_max)) > 1e-9 * std::max(1.0, ratio))
    throw InputError("utility_lattice: bound must be a multiple of step");
  const std::size_t per_axis = static_cast<std::size_t>(2 * k_max + 1);
  double total = 1.0;
  for (std::size_t i = 1; i < n; ++i) total *= static_cast<double>(per_axis);
  if (total > 1e7) throw SizeError("utility_lattice: too many vectors");

  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<long> k(n, -k_max);
  k[0] = 0;
  while (true) {
    std::vector<double> f(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) f[i] = static_cast<double>(k[i]) * step;
    out.push_back(std::move(f));
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (k[i] < k_max) {
        ++k[i];
        break;
      }
      k[i] = -k_max;
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

namespace {

// Solves the square system a x = b in place by partial pivoting; false when
// the system is (numerically) singular.
bool solve_square(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-10) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < m; ++r) b[r] /= a[r][r];
  return true;
}

}  // namespace

std::vector<std::vector<double>> supporting_slopes(const CostFunction& c) {
  if (c.form() != CostForm::grid) throw InputError("supporting_slopes: grid costs only");
  const std::size_t n = c.dimension();
  const auto finite = c.finite_indices();
  const auto pts = c.points();
  if (n == 1) return {{0.0}};
  const std::size_t m = finite.size();
  if (m < n) return {};
  double subsets = 1.0;
  for (std::size_t i = 0; i < n; ++i) subsets = subsets * static_cast<double>(m - i) / static_cast<double>(i + 1);
  if (subsets > 2e6) throw SizeError("supporting_slopes: too many point subsets");

  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    // Affine a(p) = b + sum_{i>=1} f_i p_i through the chosen points.
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto& cp = pts[finite[idx[r]]];
      a[r][0] = 1.0;
      for (std::size_t i = 1; i < n; ++i) a[r][i] = cp.p[i];
      rhs[r] = cp.value;
    }
    if (solve_square(a, rhs)) {
      bool below = true;
      for (std::size_t j : finite) {
        const auto& cp = pts[j];
        double v = rhs[0];
        for (std::size_t i = 1; i < n; ++i) v += rhs[i] * cp.p[i];
        if (v > cp.value + 1e-9) {
          below = false;
          break;
        }
      }
      if (below) {
        std::vector<double> f(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) f[i] = rhs[i];
        const bool seen = std::any_of(out.begin(), out.end(), [&](const std::vector<double>& g) {
          for (std::size_t i = 0; i < n; ++i)
            if (std::abs(g[i] - f[i]) > 1e-9) return false;
          return true;
        });
        if (!seen) out.push_back(std::move(f));
      }
    }
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double lipschitz_scale(const CostFunction& c) {
  double scale = 0.0;
  for (const auto& f : supporting_slopes(c))
    for (double x : f) scale = std::max(scale, std::abs(x));
  return scale;
}

double biconjugate(const CostFunction& c, std::span<const std::vector<double>> f_grid, const SimplexPoint& p) {
  double best = -kInf;
  for (const auto& f : f_grid) best = std::max(best, dot(f, p) - conjugate(c, f));
  return best;
}

std::optional<Disagreement> find_disagreement(const PreferenceOracle& a, const PreferenceOracle& b,
                                              const SamplerConfig& cfg) {
  cfg.validate();
  if (!(a.space() == b.space())) throw DomainError("find_disagreement: oracles on different output spaces");
  auto trial = [&](Rng& rng, bool& hypothesis) -> std::optional<Disagreement> {
    hypothesis = true;
    const Contract w = random_contract(rng, a.space(), cfg);
    Contract w2 = random_contract(rng, a.space(), cfg);
    if (rng.bernoulli(0.5)) {
      try {
        w2 = Contract::constant(a.space(), Lottery::degenerate(certainty_equivalent(b, w)));
      } catch (const Error&) {
      }
    }
    Disagreement d{w, w2, value(a, w), value(a, w2), value(b, w), value(b, w2)};
    const double da = d.value_a_w - d.value_a_w2;
    const double db = d.value_b_w - d.value_b_w2;
    const bool differ = (da > cfg.violation_margin && db <= cfg.band) ||
                        (db > cfg.violation_margin && da <= cfg.band) ||
                        (da < -cfg.violation_margin && db >= -cfg.band) ||
                        (db < -cfg.violation_margin && da >= -cfg.band);
    if (differ) return d;
    return std::nullopt;
  };
  return run_search<Disagreement>(cfg, trial).witness;
}

}  // namespace mhp
