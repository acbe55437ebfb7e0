#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhp/contract.hpp"
#include "mhp/cost.hpp"
#include "mhp/oracle.hpp"
#include "mhp/sampling.hpp"
#include "mhp/simplex.hpp"
#include "mhp/tolerances.hpp"
#include "mhp/utility.hpp"

namespace mhp {

enum class Verdict { holds, fails, inconclusive };

struct OrderWitness {
  std::string note;
  std::vector<Contract> contracts;
  std::vector<SimplexPoint> points;
  std::vector<std::vector<double>> vectors;
  std::vector<double> values;
  std::optional<double> prize;
};

struct OrderVerdict {
  Verdict verdict = Verdict::holds;
  std::size_t samples = 0;
  std::size_t hypothesis_samples = 0;
  std::optional<OrderWitness> witness;

  bool holds() const { return verdict == Verdict::holds; }
};

// w is o-steeper than w2: (1/2) w(s) + (1/2) w2(s') >= (1/2) w(s') + (1/2) w2(s)
// for all s >= s'. Computed from comparisons and, independently, as
// "u o w - u o w2 is increasing"; throws std::logic_error if the two routes
// disagree.
bool is_steeper(const PreferenceOracle& o, const Contract& w, const Contract& w2);
bool is_steeper_by_comparisons(const PreferenceOracle& o, const Contract& w, const Contract& w2,
                               double band = kTol.optimization);
bool is_increasing_difference(std::span<const double> f, std::span<const double> f2,
                              double tol = 2 * kTol.optimization);

// a is more confident than b: w >=_b (>_b) x implies w >=_a (>_a) x for
// contracts w and constant x.
OrderVerdict more_confident_behavioral(const PreferenceOracle& a, const PreferenceOracle& b,
                                       const SamplerConfig& cfg);

// u_a = u_b on prizes and c_a <= c_b + tol on points.
OrderVerdict more_confident_parametric(const CostFunction& ca, const UtilityFunction& ua,
                                       const CostFunction& cb, const UtilityFunction& ub,
                                       std::span<const SimplexPoint> points,
                                       std::span<const double> prizes, double tol = 1e-9);

struct UpshiftPairResult {
  bool holds = false;
  std::optional<SimplexPoint> q;
  std::optional<SimplexPoint> q2;
  double best_total = kInf;
  double reference_total = kInf;
  // best_total - reference_total (<= tol when holds).
  double gap = kInf;
};

// Looks for q, q' with p FOSD q', q FOSD p', q + q' = p + p' and
// c(q) + c2(q') <= c(p) + c2(p') + tol. Exact convex line search for two
// levels; resolution-`resolution` sub-grid plus lattice join/meet candidates
// for three or more (a "fails" there is grid-relative).
UpshiftPairResult upshift_pair(const CostFunction& c, const CostFunction& c2,
                               const SimplexPoint& p, const SimplexPoint& p2, double tol = 1e-9,
                               std::size_t resolution = 20);

// c is up-shifted from c2 on every ordered pair of grid points.
OrderVerdict is_upshifted(const CostFunction& c, const CostFunction& c2,
                          std::span<const SimplexPoint> grid, double tol = 1e-9,
                          std::size_t resolution = 20);

struct LevelSets {
  double k;
  std::vector<SimplexPoint> points;
};

LevelSets level_set(const CostFunction& c, double k, std::span<const SimplexPoint> grid,
                    double tol = kTol.equality);

// Weak set order under FOSD between the grid level sets L_k of c and L'_k of c2.
bool level_set_weak_order(const CostFunction& c, const CostFunction& c2, double k,
                          std::span<const SimplexPoint> grid);

// a is more optimistic than b: for a-steeper w over w2, w >=_b (>_b) w2
// implies w >=_a (>_a) w2. Inconclusive with fewer than cfg.min_hypothesis
// steep pairs.
OrderVerdict more_optimistic_behavioral(const PreferenceOracle& a, const PreferenceOracle& b,
                                        const SamplerConfig& cfg);

// For f - f2 increasing: phi_c2(f) >= (>) phi_c2(f2) implies phi_c(f) >= (>) phi_c(f2).
OrderVerdict lemma_b_check(const CostFunction& c, const CostFunction& c2, const SamplerConfig& cfg);

struct AbsoluteAssessment {
  bool overconfident = false;
  bool optimistic = false;
};

AbsoluteAssessment absolute_assess(const CostFunction& c, const CostFunction& c_star,
                                   std::span<const SimplexPoint> grid, double tol = 1e-9);

// Standalone re-checks of behavioural witnesses; each returns the violation
// margin when the violation reproduces, nullopt otherwise.
std::optional<double> reverify_confidence_witness(const PreferenceOracle& a, const PreferenceOracle& b,
                                                  const OrderWitness& w, double band = kTol.optimization,
                                                  double violation_margin = kTol.strict_margin);
std::optional<double> reverify_optimism_witness(const PreferenceOracle& a, const PreferenceOracle& b,
                                                const OrderWitness& w, double band = kTol.optimization,
                                                double violation_margin = kTol.strict_margin);
std::optional<double> reverify_lemma_b_witness(const CostFunction& c, const CostFunction& c2,
                                               const OrderWitness& w, double band = kTol.optimization,
                                               double violation_margin = kTol.strict_margin);

// FOSD lattice join and meet: cumulative masses min / max of p and p2.
SimplexPoint fosd_join(const SimplexPoint& p, const SimplexPoint& p2);
SimplexPoint fosd_meet(const SimplexPoint& p, const SimplexPoint& p2);

}  // namespace mhp
