#pragma once

#include <span>
#include <vector>

#include "mhp/contract.hpp"
#include "mhp/cost.hpp"
#include "mhp/output_space.hpp"
#include "mhp/simplex.hpp"
#include "mhp/tolerances.hpp"
#include "mhp/utility.hpp"

namespace mhp {

enum class OracleKind { moral_hazard, malevolent, income_effects };

enum class Preference { strictly_prefers, indifferent, strictly_dispreferred };

// A preference over contracts given by one of three model families. With
// f = utility_vector(u, w):
//
//   moral_hazard     max_p  -c(p) + <f, p>
//   malevolent       min_p   c(p) + <f, p>
//   income_effects   max_p  V(p, <f, p>),  V(p, t) = t - c(p) (1 + lambda e^{-t})
class PreferenceOracle {
 public:
  static PreferenceOracle moral_hazard(OutputSpace space, CostFunction c, UtilityFunction u);
  static PreferenceOracle malevolent(OutputSpace space, CostFunction c, UtilityFunction u);
  // search_resolution is the simplex-grid resolution enumerated for three or
  // more output levels; two-level models are optimised by scan plus
  // golden-section search instead.
  static PreferenceOracle income_effects(OutputSpace space, CostFunction c, UtilityFunction u,
                                         double lambda, std::size_t search_resolution = 20);

  OracleKind kind() const { return kind_; }
  const OutputSpace& space() const { return space_; }
  const CostFunction& cost() const { return cost_; }
  const UtilityFunction& utility() const { return utility_; }
  double lambda() const { return lambda_; }
  std::size_t search_resolution() const { return search_resolution_; }

  // Value of a contract whose utility vector is f.
  double value_of_utilities(std::span<const double> f) const;

 private:
  PreferenceOracle(OracleKind kind, OutputSpace space, CostFunction c, UtilityFunction u);

  double income_effects_value(std::span<const double> f) const;

  OracleKind kind_;
  OutputSpace space_;
  CostFunction cost_;
  UtilityFunction utility_;
  double lambda_ = 0.0;
  std::size_t search_resolution_ = 0;
  // Candidate distributions and their costs for income_effects with n >= 3.
  std::vector<SimplexPoint> search_points_;
  std::vector<double> search_costs_;
};

double value(const PreferenceOracle& o, const Contract& w);

// Sign of value(w) - value(w2) with indifference band tol.
Preference compare(const PreferenceOracle& o, const Contract& w, const Contract& w2,
                   double tol = kTol.optimization);

// True when w is weakly preferred to w2 (strictly_prefers or indifferent).
bool weakly_prefers(const PreferenceOracle& o, const Contract& w, const Contract& w2,
                    double tol = kTol.optimization);

// Maximisers of -c(p) + <f, p> for a moral-hazard oracle: every finite
// generating point within tol of the maximum (grid costs) or the clamped
// stationary point (quadratic1d). Throws InputError for other kinds.
std::vector<SimplexPoint> argmax_efforts(const PreferenceOracle& o, const Contract& w,
                                         double tol = kTol.optimization);

// phi(f) = max_p <f, p> - c(p).
double conjugate(const CostFunction& c, std::span<const double> f);

// min_p c(p) + <f, p>.
double lower_conjugate(const CostFunction& c, std::span<const double> f);

// Maximiser of <f, p> - c(p) (lowest-index generating point for grid costs).
SimplexPoint conjugate_argmax(const CostFunction& c, std::span<const double> f);

// u^{-1}(value(o, w)): the sure prize indifferent to w.
double certainty_equivalent(const PreferenceOracle& o, const Contract& w);

// Contract paying u^{-1}(f_i) for sure at s_i; RangeError if some f_i is not
// attainable.
Contract contract_from_utility_vector(const UtilityFunction& u, const OutputSpace& space,
                                      std::span<const double> f);

}  // namespace mhp
