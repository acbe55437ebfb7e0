#include "mhp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "mhp/errors.hpp"

namespace mhp {

namespace {

void check_dim(const CostFunction& c, std::span<const double> f) {
  if (f.size() != c.dimension()) throw DomainError("utility vector dimension differs from the cost's");
}

// Clamped stationary point of <f, p> -/+ alpha (p_high - beta)^2 in the
// high-output mass: sign = +1 for the max problem, -1 for the min problem.
double quadratic_optimum(const CostFunction& c, double slope, double sign) {
  if (c.alpha() == 0.0) {
    if (slope == 0.0) return c.beta();
    return (sign * slope > 0.0) ? 1.0 : 0.0;
  }
  return std::clamp(c.beta() + sign * slope / (2.0 * c.alpha()), 0.0, 1.0);
}

constexpr double kInvPhi = 0.6180339887498949;

// Golden-section maximisation of g on [a, b] to width tol.
template <class G>
std::pair<double, double> golden_max(G&& g, double a, double b, double tol) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  while (b - a > tol) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + kInvPhi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - kInvPhi * (b - a);
      g1 = g(x1);
    }
  }
  return g1 >= g2 ? std::pair{x1, g1} : std::pair{x2, g2};
}

// V(p, t) = t - c(p) (1 + lambda e^{-t}).
double income_effects_objective(double t, double cost, double lambda) {
  if (cost == 0.0) return t;
  if (!std::isfinite(cost)) return -kInf;
  return t - cost * (1.0 + lambda * std::exp(-t));
}

}  // namespace

PreferenceOracle::PreferenceOracle(OracleKind kind, OutputSpace space, CostFunction c, UtilityFunction u)
    : kind_(kind), space_(std::move(space)), cost_(std::move(c)), utility_(std::move(u)) {
  if (space_.size() != cost_.dimension())
    throw InputError("oracle: cost dimension differs from the number of output levels");
}

PreferenceOracle PreferenceOracle::moral_hazard(OutputSpace space, CostFunction c, UtilityFunction u) {
  return PreferenceOracle(OracleKind::moral_hazard, std::move(space), std::move(c), std::move(u));
}

PreferenceOracle PreferenceOracle::malevolent(OutputSpace space, CostFunction c, UtilityFunction u) {
  return PreferenceOracle(OracleKind::malevolent, std::move(space), std::move(c), std::move(u));
}

PreferenceOracle PreferenceOracle::income_effects(OutputSpace space, CostFunction c, UtilityFunction u,
                                                  double lambda, std::size_t search_resolution) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw InputError("income effects: lambda must be > 0");
  if (search_resolution == 0) throw InputError("income effects: search resolution must be >= 1");
  PreferenceOracle o(OracleKind::income_effects, std::move(space), std::move(c), std::move(u));
  o.lambda_ = lambda;
  o.search_resolution_ = search_resolution;
  if (o.cost_.dimension() >= 3) {
    o.search_points_ = simplex_grid(o.cost_.dimension(), search_resolution);
    for (std::size_t j : o.cost_.finite_indices()) {
      const auto& p = o.cost_.points()[j].p;
      if (std::find(o.search_points_.begin(), o.search_points_.end(), p) == o.search_points_.end())
        o.search_points_.push_back(p);
    }
    for (const auto& p : o.search_points_) o.search_costs_.push_back(cost_at(o.cost_, p));
  }
  return o;
}

double PreferenceOracle::income_effects_value(std::span<const double> f) const {
  const std::size_t n = f.size();
  if (n == 1) return f[0];
  if (n == 2) {
    const double lo = cost_.finite_lo();
    const double hi = cost_.finite_hi();
    auto g = [&](double h) {
      const double t = f[0] + (f[1] - f[0]) * h;
      return income_effects_objective(t, cost_at_high_mass(cost_, h), lambda_);
    };
    if (hi - lo <= 0.0) return g(lo);
    constexpr int kScan = 200;
    int best_k = 0;
    double best = -kInf;
    for (int k = 0; k <= kScan; ++k) {
      const double v = g(lo + (hi - lo) * k / kScan);
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
    const double a = lo + (hi - lo) * std::max(0, best_k - 1) / kScan;
    const double b = lo + (hi - lo) * std::min(kScan, best_k + 1) / kScan;
    return std::max(best, golden_max(g, a, b, 1e-10).second);
  }
  double best = -kInf;
  for (std::size_t j = 0; j < search_points_.size(); ++j) {
    const double t = dot(f, search_points_[j]);
    best = std::max(best, income_effects_objective(t, search_costs_[j], lambda_));
  }
  return best;
}

double PreferenceOracle::value_of_utilities(std::span<const double> f) const {
  check_dim(cost_, f);
  switch (kind_) {
    case OracleKind::moral_hazard:
      return conjugate(cost_, f);
    case OracleKind::malevolent:
      return lower_conjugate(cost_, f);
    case OracleKind::income_effects:
      return income_effects_value(f);
  }
  return 0.0;
}

double value(const PreferenceOracle& o, const Contract& w) {
  if (!(w.space() == o.space())) throw DomainError("contract is not on the oracle's output space");
  const auto f = utility_vector(o.utility(), w);
  return o.value_of_utilities(f);
}

Preference compare(const PreferenceOracle& o, const Contract& w, const Contract& w2, double tol) {
  const double diff = value(o, w) - value(o, w2);
  if (diff > tol) return Preference::strictly_prefers;
  if (diff < -tol) return Preference::strictly_dispreferred;
  return Preference::indifferent;
}

bool weakly_prefers(const PreferenceOracle& o, const Contract& w, const Contract& w2, double tol) {
  return compare(o, w, w2, tol) != Preference::strictly_dispreferred;
}

double conjugate(const CostFunction& c, std::span<const double> f) {
  check_dim(c, f);
  if (c.form() == CostForm::quadratic1d) {
    const double slope = f[1] - f[0];
    const double h = quadratic_optimum(c, slope, 1.0);
    const double d = h - c.beta();
    return f[0] + slope * h - c.alpha() * d * d;
  }
  return kernels::max_affine(c.pack(), f).value;
}

double lower_conjugate(const CostFunction& c, std::span<const double> f) {
  check_dim(c, f);
  if (c.form() == CostForm::quadratic1d) {
    const double slope = f[1] - f[0];
    const double h = quadratic_optimum(c, slope, -1.0);
    const double d = h - c.beta();
    return c.alpha() * d * d + f[0] + slope * h;
  }
  return kernels::min_affine(c.pack(), f).value;
}

SimplexPoint conjugate_argmax(const CostFunction& c, std::span<const double> f) {
  check_dim(c, f);
  if (c.form() == CostForm::quadratic1d) return SimplexPoint::binary(quadratic_optimum(c, f[1] - f[0], 1.0));
  const auto best = kernels::max_affine(c.pack(), f);
  return c.points()[c.finite_indices()[best.index]].p;
}

std::vector<SimplexPoint> argmax_efforts(const PreferenceOracle& o, const Contract& w, double tol) {
  if (o.kind() != OracleKind::moral_hazard) throw InputError("argmax_efforts: moral-hazard oracles only");
  const auto f = utility_vector(o.utility(), w);
  if (!(w.space() == o.space())) throw DomainError("contract is not on the oracle's output space");
  const CostFunction& c = o.cost();
  std::vector<SimplexPoint> out;
  if (c.form() == CostForm::quadratic1d) {
    const double slope = f[1] - f[0];
    if (c.alpha() == 0.0) {
      if (slope > tol) return {SimplexPoint::binary(1.0)};
      if (slope < -tol) return {SimplexPoint::binary(0.0)};
      return {SimplexPoint::binary(0.0), SimplexPoint::binary(1.0)};
    }
    return {SimplexPoint::binary(quadratic_optimum(c, slope, 1.0))};
  }
  const double best = conjugate(c, f);
  for (std::size_t j : c.finite_indices()) {
    const auto& pt = c.points()[j];
    if (dot(f, pt.p) - pt.value >= best - tol &&
        std::find(out.begin(), out.end(), pt.p) == out.end())
      out.push_back(pt.p);
  }
  return out;
}

double certainty_equivalent(const PreferenceOracle& o, const Contract& w) {
  return o.utility().inverse(value(o, w));
}

Contract contract_from_utility_vector(const UtilityFunction& u, const OutputSpace& space,
                                      std::span<const double> f) {
  if (f.size() != space.size()) throw DomainError("utility vector dimension differs from the output space");
  std::vector<double> prizes(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) prizes[i] = u.inverse(f[i]);
  return Contract::degenerate(space, prizes);
}

}  // namespace mhp
