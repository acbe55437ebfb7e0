#pragma once

#include <limits>
#include <span>
#include <vector>

#include "mhp/contract.hpp"
#include "mhp/lottery.hpp"

namespace mhp {

enum class UtilityKind { linear, cara, piecewise_linear };

struct Knot {
  double prize;
  double value;

  friend bool operator==(const Knot&, const Knot&) = default;
};

// Strictly increasing Bernoulli utility normalised so that u(pi0) = 0 and
// u(pi1) = 1 for reference prizes pi0 < pi1.
//
//   linear            u(x) = (x - pi0) / (pi1 - pi0)
//   cara(a), a != 0   u(x) = (1 - e^{-a (x - pi0)}) / (1 - e^{-a (pi1 - pi0)})
//   piecewise_linear  interpolation of knots, extended linearly beyond the
//                     outer knots with the outer segments' slopes
//
// The prize domain is the whole real line unless restricted with
// with_domain(); a bounded domain makes the function bounded both ways.
class UtilityFunction {
 public:
  static UtilityFunction linear(double pi0 = 0.0, double pi1 = 1.0);
  static UtilityFunction cara(double risk_aversion, double pi0 = 0.0, double pi1 = 1.0);
  // Knots must be strictly increasing in both coordinates and pass through
  // (pi0, 0) and (pi1, 1) within 1e-12.
  static UtilityFunction piecewise_linear(std::vector<Knot> knots, double pi0, double pi1);

  UtilityFunction with_domain(double lo, double hi) const;

  double operator()(double prize) const;
  // u^{-1}; throws RangeError when value is outside the attainable range.
  double inverse(double value) const;

  UtilityKind kind() const { return kind_; }
  double risk_aversion() const { return risk_aversion_; }
  std::span<const Knot> knots() const { return knots_; }
  double pi0() const { return pi0_; }
  double pi1() const { return pi1_; }
  double domain_lo() const { return domain_lo_; }
  double domain_hi() const { return domain_hi_; }
  bool has_bounded_domain() const;

  bool unbounded_above() const;
  bool unbounded_below() const;
  bool unbounded() const { return unbounded_above() && unbounded_below(); }

  // Infimum / supremum of u over the domain (possibly infinite, not attained
  // when the domain is unbounded).
  double range_lo() const;
  double range_hi() const;

  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

 private:
  UtilityFunction(UtilityKind kind, double pi0, double pi1) : kind_(kind), pi0_(pi0), pi1_(pi1) {}

  double eval_unchecked(double prize) const;

  UtilityKind kind_;
  double pi0_;
  double pi1_;
  double risk_aversion_ = 0.0;
  std::vector<Knot> knots_;
  double domain_lo_ = -std::numeric_limits<double>::infinity();
  double domain_hi_ = std::numeric_limits<double>::infinity();
};

double expected_utility(const UtilityFunction& u, const Lottery& x);

// Component i is expected_utility(u, w(s_i)).
std::vector<double> utility_vector(const UtilityFunction& u, const Contract& w);

}  // namespace mhp
