#include "mhp/utility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mhp/errors.hpp"
#include "mhp/tolerances.hpp"

namespace mhp {

namespace {

void check_reference(double pi0, double pi1) {
  if (!(std::isfinite(pi0) && std::isfinite(pi1) && pi0 < pi1))
    throw InputError("reference prizes must satisfy pi0 < pi1");
}

// Linear interpolation through knots, extended with the outer slopes.
double interpolate(std::span<const Knot> knots, double x) {
  const auto upper = std::upper_bound(knots.begin(), knots.end(), x,
                                      [](double v, const Knot& k) { return v < k.prize; });
  std::size_t hi = static_cast<std::size_t>(upper - knots.begin());
  hi = std::clamp<std::size_t>(hi, 1, knots.size() - 1);
  const Knot& a = knots[hi - 1];
  const Knot& b = knots[hi];
  const double slope = (b.value - a.value) / (b.prize - a.prize);
  return a.value + slope * (x - a.prize);
}

double interpolate_inverse(std::span<const Knot> knots, double y) {
  const auto upper = std::upper_bound(knots.begin(), knots.end(), y,
                                      [](double v, const Knot& k) { return v < k.value; });
  std::size_t hi = static_cast<std::size_t>(upper - knots.begin());
  hi = std::clamp<std::size_t>(hi, 1, knots.size() - 1);
  const Knot& a = knots[hi - 1];
  const Knot& b = knots[hi];
  const double slope = (b.prize - a.prize) / (b.value - a.value);
  return a.prize + slope * (y - a.value);
}

}  // namespace

UtilityFunction UtilityFunction::linear(double pi0, double pi1) {
  check_reference(pi0, pi1);
  return UtilityFunction(UtilityKind::linear, pi0, pi1);
}

UtilityFunction UtilityFunction::cara(double risk_aversion, double pi0, double pi1) {
  check_reference(pi0, pi1);
  if (!std::isfinite(risk_aversion) || risk_aversion == 0.0)
    throw InputError("cara risk aversion must be finite and non-zero (use linear for zero)");
  UtilityFunction u(UtilityKind::cara, pi0, pi1);
  u.risk_aversion_ = risk_aversion;
  return u;
}

UtilityFunction UtilityFunction::piecewise_linear(std::vector<Knot> knots, double pi0, double pi1) {
  check_reference(pi0, pi1);
  if (knots.size() < 2) throw InputError("piecewise-linear utility needs at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].prize) || !std::isfinite(knots[i].value))
      throw InputError("utility knots must be finite");
    if (i > 0 && !(knots[i - 1].prize < knots[i].prize && knots[i - 1].value < knots[i].value))
      throw InputError("utility knots must be strictly increasing in prize and value");
  }
  UtilityFunction u(UtilityKind::piecewise_linear, pi0, pi1);
  u.knots_ = std::move(knots);
  if (std::abs(u.eval_unchecked(pi0)) > kTol.equality ||
      std::abs(u.eval_unchecked(pi1) - 1.0) > kTol.equality)
    throw InputError("piecewise-linear utility is not normalised at the reference prizes");
  return u;
}

UtilityFunction UtilityFunction::with_domain(double lo, double hi) const {
  if (!(lo < hi)) throw InputError("utility domain must satisfy lo < hi");
  if (!(lo <= pi0_ && pi1_ <= hi)) throw InputError("utility domain must contain the reference prizes");
  UtilityFunction u = *this;
  u.domain_lo_ = lo;
  u.domain_hi_ = hi;
  return u;
}

bool UtilityFunction::has_bounded_domain() const {
  return std::isfinite(domain_lo_) || std::isfinite(domain_hi_);
}

double UtilityFunction::eval_unchecked(double x) const {
  switch (kind_) {
    case UtilityKind::linear:
      return (x - pi0_) / (pi1_ - pi0_);
    case UtilityKind::cara:
      return std::expm1(-risk_aversion_ * (x - pi0_)) / std::expm1(-risk_aversion_ * (pi1_ - pi0_));
    case UtilityKind::piecewise_linear:
      return interpolate(knots_, x);
  }
  return 0.0;
}

double UtilityFunction::operator()(double prize) const {
  if (!(prize >= domain_lo_ && prize <= domain_hi_))
    throw DomainError("prize " + std::to_string(prize) + " outside the utility domain");
  return eval_unchecked(prize);
}

bool UtilityFunction::unbounded_above() const {
  if (std::isfinite(domain_hi_)) return false;
  return kind_ != UtilityKind::cara || risk_aversion_ < 0.0;
}

bool UtilityFunction::unbounded_below() const {
  if (std::isfinite(domain_lo_)) return false;
  return kind_ != UtilityKind::cara || risk_aversion_ > 0.0;
}

double UtilityFunction::range_lo() const {
  if (std::isfinite(domain_lo_)) return eval_unchecked(domain_lo_);
  if (unbounded_below()) return -INFINITY;
  // cara with a < 0: u -> -1 / expm1(-a (pi1 - pi0)) as x -> -inf
  return -1.0 / std::expm1(-risk_aversion_ * (pi1_ - pi0_));
}

double UtilityFunction::range_hi() const {
  if (std::isfinite(domain_hi_)) return eval_unchecked(domain_hi_);
  if (unbounded_above()) return INFINITY;
  return -1.0 / std::expm1(-risk_aversion_ * (pi1_ - pi0_));
}

double UtilityFunction::inverse(double v) const {
  if (!std::isfinite(v)) throw RangeError("utility value must be finite");
  const double lo = range_lo();
  const double hi = range_hi();
  const bool closed_lo = std::isfinite(domain_lo_);
  const bool closed_hi = std::isfinite(domain_hi_);
  if (v < lo || v > hi || (!closed_lo && v == lo) || (!closed_hi && v == hi))
    throw RangeError("utility value " + std::to_string(v) + " outside the range of u");
  double x = 0.0;
  switch (kind_) {
    case UtilityKind::linear:
      x = pi0_ + v * (pi1_ - pi0_);
      break;
    case UtilityKind::cara: {
      const double arg = v * std::expm1(-risk_aversion_ * (pi1_ - pi0_));
      if (!(arg > -1.0)) throw RangeError("utility value outside the range of cara u");
      x = pi0_ - std::log1p(arg) / risk_aversion_;
      break;
    }
    case UtilityKind::piecewise_linear:
      x = interpolate_inverse(knots_, v);
      break;
  }
  return std::clamp(x, domain_lo_, domain_hi_);
}

double expected_utility(const UtilityFunction& u, const Lottery& x) {
  double acc = 0.0;
  for (const auto& o : x.support()) acc += u(o.prize) * o.prob;
  return acc;
}

std::vector<double> utility_vector(const UtilityFunction& u, const Contract& w) {
  std::vector<double> f(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) f[i] = expected_utility(u, w.at(i));
  return f;
}

}  // namespace mhp
