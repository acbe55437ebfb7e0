#pragma once

#include <span>
#include <string>
#include <vector>

#include "mhp/cost.hpp"
#include "mhp/simplex.hpp"

namespace mhp {

// A finite-effort moral-hazard model: effort e costs costs[e] and induces the
// output distribution beliefs[e].
struct StandardModel {
  std::vector<std::string> efforts;
  std::vector<double> costs;
  std::vector<SimplexPoint> beliefs;

  // Throws InputError unless sizes agree, there is at least one effort,
  // all beliefs share a dimension, costs are >= 0 and min cost is 0.
  void validate() const;
  std::size_t dimension() const { return beliefs.front().size(); }
};

// Output-distribution cost of a standard model:
//   c(p) = min { sum mu_e C(e) : sum mu_e P_e = p, sum mu_e = 1, mu >= 0 },
// one LP per point, +inf where p is unreachable.
//
// The returned grid cost is evaluated at the points of grid followed by every
// belief P_e not already in grid. Including the beliefs makes the envelope of
// the result coincide with c everywhere, and guarantees groundedness.
CostFunction reduce_standard(const StandardModel& m, std::span<const SimplexPoint> grid);

// The reduction LP at a single point (+inf when infeasible).
double reduced_cost_at(const StandardModel& m, const SimplexPoint& p);

}  // namespace mhp
