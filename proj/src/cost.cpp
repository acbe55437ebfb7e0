#include "mhp/cost.hpp"

#include <algorithm>
#include <cmath>

#include "mhp/errors.hpp"
#include "mhp/lp.hpp"
#include "mhp/tolerances.hpp"

namespace mhp {

namespace {

struct HullPoint {
  double x;  // high-output mass
  double y;
};

// Lower convex hull (monotone chain) of finite two-level points.
std::vector<HullPoint> lower_hull(std::vector<HullPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<HullPoint> hull;
  for (const auto& pt : pts) {
    if (!hull.empty() && hull.back().x == pt.x) continue;  // keeps the lowest y
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const double cross = (a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  return hull;
}

double hull_value(const std::vector<HullPoint>& hull, double x) {
  constexpr double kSlack = 1e-9;
  if (x < hull.front().x - kSlack || x > hull.back().x + kSlack) return kInf;
  x = std::clamp(x, hull.front().x, hull.back().x);
  if (hull.size() == 1) return hull.front().y;
  const auto upper = std::upper_bound(hull.begin(), hull.end(), x,
                                      [](double v, const HullPoint& h) { return v < h.x; });
  std::size_t hi = std::clamp<std::size_t>(static_cast<std::size_t>(upper - hull.begin()), 1,
                                           hull.size() - 1);
  const auto& a = hull[hi - 1];
  const auto& b = hull[hi];
  const double t = (x - a.x) / (b.x - a.x);
  return std::max(0.0, a.y + t * (b.y - a.y));
}

}  // namespace

struct CostFunction::GridData {
  std::vector<CostPoint> points;
  std::vector<std::size_t> finite;
  std::vector<CostPoint> finite_points;
  kernels::PointPack pack;
  std::vector<HullPoint> hull;  // two levels only
};

CostFunction CostFunction::quadratic1d(double alpha, double beta) {
  if (!(std::isfinite(alpha) && alpha >= 0.0)) throw InputError("quadratic1d: alpha must be >= 0");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("quadratic1d: beta must lie in [0, 1]");
  CostFunction c;
  c.form_ = CostForm::quadratic1d;
  c.dim_ = 2;
  c.alpha_ = alpha;
  c.beta_ = beta;
  return c;
}

CostFunction CostFunction::grid(std::vector<CostPoint> points) {
  if (points.empty()) throw InputError("grid cost needs at least one point");
  const std::size_t dim = points.front().p.size();
  auto data = std::make_shared<GridData>();
  double min_value = kInf;
  for (std::size_t j = 0; j < points.size(); ++j) {
    auto& pt = points[j];
    if (pt.p.size() != dim) throw InputError("grid cost points must share a dimension");
    if (std::isnan(pt.value) || pt.value == -kInf) throw InputError("grid cost values must be >= 0 or inf");
    if (pt.value < 0.0) {
      if (pt.value < -kTol.equality) throw InputError("grid cost values must be >= 0 or inf");
      pt.value = 0.0;
    }
    if (std::isfinite(pt.value)) {
      data->finite.push_back(j);
      min_value = std::min(min_value, pt.value);
    }
  }
  if (data->finite.empty()) throw InputError("grid cost needs at least one finite value");
  if (min_value > kTol.equality) throw InputError("grid cost is not grounded (minimum value is not 0)");

  std::vector<std::vector<double>> coords;
  std::vector<double> weights;
  for (std::size_t j : data->finite) {
    const auto& pt = points[j];
    data->finite_points.push_back(pt);
    coords.emplace_back(pt.p.probs().begin(), pt.p.probs().end());
    weights.push_back(pt.value);
  }
  data->pack = kernels::PointPack::build(dim, coords, weights);
  if (dim == 2) {
    std::vector<HullPoint> pts;
    for (const auto& pt : data->finite_points) pts.push_back({pt.p.high_mass(), pt.value});
    data->hull = lower_hull(std::move(pts));
  }
  data->points = std::move(points);

  CostFunction c;
  c.form_ = CostForm::grid;
  c.dim_ = dim;
  c.grid_ = std::move(data);
  return c;
}

std::span<const CostPoint> CostFunction::points() const {
  if (!grid_) return {};
  return grid_->points;
}

const kernels::PointPack& CostFunction::pack() const {
  if (!grid_) throw InputError("cost function has no generating points");
  return grid_->pack;
}

std::span<const std::size_t> CostFunction::finite_indices() const {
  if (!grid_) return {};
  return grid_->finite;
}

double CostFunction::finite_lo() const {
  if (dim_ != 2) throw DomainError("finite_lo: two-level costs only");
  return form_ == CostForm::quadratic1d ? 0.0 : grid_->hull.front().x;
}

double CostFunction::finite_hi() const {
  if (dim_ != 2) throw DomainError("finite_hi: two-level costs only");
  return form_ == CostForm::quadratic1d ? 1.0 : grid_->hull.back().x;
}

bool operator==(const CostFunction& a, const CostFunction& b) {
  if (a.form_ != b.form_ || a.dim_ != b.dim_) return false;
  if (a.form_ == CostForm::quadratic1d) return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  return std::equal(a.grid_->points.begin(), a.grid_->points.end(), b.grid_->points.begin(),
                    b.grid_->points.end());
}

double envelope_by_lp(std::span<const CostPoint> points, const SimplexPoint& p) {
  LinearProgram lp;
  const std::size_t n = p.size();
  lp.constraints.assign(n, {});
  for (const auto& pt : points) {
    if (!std::isfinite(pt.value)) continue;
    if (pt.p.size() != n) throw DomainError("envelope_by_lp: dimension mismatch");
    lp.objective.push_back(pt.value);
    for (std::size_t i = 0; i < n; ++i) lp.constraints[i].push_back(pt.p[i]);
  }
  if (lp.objective.empty()) return kInf;
  lp.rhs.assign(p.probs().begin(), p.probs().end());
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) return kInf;
  return std::max(0.0, r.value);
}

double cost_at(const CostFunction& c, const SimplexPoint& p) {
  if (p.size() != c.dim_) throw DomainError("cost_at: dimension mismatch");
  if (c.form_ == CostForm::quadratic1d) {
    const double d = p.high_mass() - c.beta_;
    return c.alpha_ * d * d;
  }
  const auto& g = *c.grid_;
  if (c.dim_ == 1) return 0.0;
  if (c.dim_ == 2) return hull_value(g.hull, p.high_mass());
  return envelope_by_lp(g.finite_points, p);
}

double cost_at_high_mass(const CostFunction& c, double h) {
  if (c.dim_ != 2) throw DomainError("cost_at_high_mass: two-level costs only");
  if (c.form_ == CostForm::quadratic1d) {
    const double d = h - c.beta_;
    return c.alpha_ * d * d;
  }
  return hull_value(c.grid_->hull, h);
}

}  // namespace mhp
