#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mhp/cost.hpp"
#include "mhp/oracle.hpp"
#include "mhp/sampling.hpp"
#include "mhp/simplex.hpp"
#include "mhp/utility.hpp"

namespace mhp {

struct IdentificationConfig {
  // Prizes at which u is recovered; pi0 and pi1 are always added.
  std::vector<double> prize_grid;
  // Utility vectors over which the recovery supremum for c is taken.
  std::vector<std::vector<double>> f_grid;
  // Distributions at which c is recovered.
  std::vector<SimplexPoint> p_grid;
  double bisection_tol = 1e-9;
  double ce_tol = 1e-9;

  void validate() const;
};

// Recovers u on cfg.prize_grid from comparisons of constant contracts only.
// For pi in [pi0, pi1], u(pi) is the lambda with
//   pi ~ lambda pi1 + (1 - lambda) pi0;
// above pi1 it is 1 / lambda for pi1 ~ lambda pi + (1 - lambda) pi0, and below
// pi0 it is -lambda / (1 - lambda) for pi0 ~ lambda pi1 + (1 - lambda) pi.
// Each lambda is found by bisection on compare(). Throws IdentificationError
// with a witness pair if consecutive grid prizes are not strictly ordered.
UtilityFunction recover_u(const PreferenceOracle& o, const IdentificationConfig& cfg);

// The sure prize x with x ~ w, located by bracketing and bisection on
// compare() to within tol.
double behavioral_certainty_equivalent(const PreferenceOracle& o, const Contract& w,
                                       const UtilityFunction& u, double tol);

// c^(p) = max_{f in f_grid} <f, p> - u(x_w), w = contract_from_utility_vector(u, f),
// where x_w is the behavioural certainty equivalent. This under-approximates
// c (up to ce_tol). Values are clamped at zero and shifted so that the
// minimum over p_grid is zero. Requires u unbounded above and below.
CostFunction recover_c(const PreferenceOracle& o, const UtilityFunction& u,
                       const IdentificationConfig& cfg);

// The unclamped, unshifted recovery values at each point of cfg.p_grid.
std::vector<double> recover_c_values(const PreferenceOracle& o, const UtilityFunction& u,
                                     const IdentificationConfig& cfg);

// All vectors (0, f_2, ..., f_n) with f_i on the lattice {-bound, -bound+step,
// ..., bound}. The recovery objective is invariant to adding a constant to f,
// so pinning f_1 = 0 loses nothing. Halving step yields a superset.
std::vector<std::vector<double>> utility_lattice(std::size_t n, double bound, double step);

// Gradients of the supporting hyperplanes of a grid cost's lower envelope,
// shifted so the first component is zero (one per affinely independent
// n-subset of finite points whose hyperplane lies below all others).
std::vector<std::vector<double>> supporting_slopes(const CostFunction& c);

// Largest |f_i| among supporting_slopes(c): the slope range an f-grid must
// cover for the biconjugate to be exact.
double lipschitz_scale(const CostFunction& c);

// max_{f in f_grid} <f, p> - conjugate(c, f).
double biconjugate(const CostFunction& c, std::span<const std::vector<double>> f_grid,
                   const SimplexPoint& p);

struct Disagreement {
  Contract w;
  Contract w2;
  double value_a_w;
  double value_a_w2;
  double value_b_w;
  double value_b_w2;
};

// Searches sampled contract pairs ranked differently by a and b (one strict
// by more than cfg.violation_margin where the other is not).
std::optional<Disagreement> find_disagreement(const PreferenceOracle& a, const PreferenceOracle& b,
                                              const SamplerConfig& cfg);

}  // namespace mhp
