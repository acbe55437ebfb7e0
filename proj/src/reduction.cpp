#include "mhp/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "mhp/errors.hpp"
#include "mhp/lp.hpp"
#include "mhp/tolerances.hpp"

namespace mhp {

void StandardModel::validate() const {
  if (costs.empty()) throw InputError("standard model needs at least one effort");
  if (costs.size() != beliefs.size()) throw InputError("standard model: one cost and one belief per effort");
  if (!efforts.empty() && efforts.size() != costs.size())
    throw InputError("standard model: one label per effort");
  const std::size_t n = beliefs.front().size();
  double min_cost = kInf;
  for (std::size_t e = 0; e < costs.size(); ++e) {
    if (beliefs[e].size() != n) throw InputError("standard model: beliefs must share a dimension");
    if (!(std::isfinite(costs[e]) && costs[e] >= 0.0))
      throw InputError("standard model: effort costs must be finite and >= 0");
    min_cost = std::min(min_cost, costs[e]);
  }
  if (min_cost > kTol.equality) throw InputError("standard model: effort cost is not grounded");
}

double reduced_cost_at(const StandardModel& m, const SimplexPoint& p) {
  if (p.size() != m.dimension()) throw DomainError("reduce_standard: grid dimension differs from beliefs");
  LinearProgram lp;
  const std::size_t n = p.size();
  lp.objective = m.costs;
  lp.constraints.assign(n + 1, std::vector<double>(m.costs.size(), 0.0));
  for (std::size_t e = 0; e < m.costs.size(); ++e) {
    for (std::size_t i = 0; i < n; ++i) lp.constraints[i][e] = m.beliefs[e][i];
    lp.constraints[n][e] = 1.0;
  }
  lp.rhs.assign(p.probs().begin(), p.probs().end());
  lp.rhs.push_back(1.0);
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) return kInf;
  return std::max(0.0, r.value);
}

CostFunction reduce_standard(const StandardModel& m, std::span<const SimplexPoint> grid) {
  m.validate();
  if (grid.empty()) throw InputError("reduce_standard: empty grid");
  std::vector<SimplexPoint> where(grid.begin(), grid.end());
  for (const auto& belief : m.beliefs)
    if (std::find(where.begin(), where.end(), belief) == where.end()) where.push_back(belief);

  std::vector<CostPoint> points;
  points.reserve(where.size());
  for (auto& p : where) {
    const double v = reduced_cost_at(m, p);
    points.push_back({std::move(p), v});
  }
  return CostFunction::grid(std::move(points));
}

}  // namespace mhp
