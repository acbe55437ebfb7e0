#pragma once

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "mhp/kernels.hpp"
#include "mhp/simplex.hpp"

namespace mhp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class CostForm { grid, quadratic1d };

struct CostPoint {
  SimplexPoint p;
  double value;  // >= 0, or kInf

  friend bool operator==(const CostPoint&, const CostPoint&) = default;
};

// Grounded convex lower semi-continuous cost over output distributions.
//
// grid form: a finite graph {(p_j, v_j)} standing for its lower convex
// envelope, +inf outside the convex hull of the finite-valued points.
// quadratic1d form (two output levels): c(p) = alpha (p_high - beta)^2.
class CostFunction {
 public:
  static CostFunction quadratic1d(double alpha, double beta);
  static CostFunction grid(std::vector<CostPoint> points);

  CostForm form() const { return form_; }
  std::size_t dimension() const { return dim_; }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::span<const CostPoint> points() const;

  // Finite-valued generating points (grid form) packed for the kernels.
  const kernels::PointPack& pack() const;
  // Indices into points() of the finite-valued generating points.
  std::span<const std::size_t> finite_indices() const;

  // Interval of high-output mass on which c is finite (two-level costs).
  double finite_lo() const;
  double finite_hi() const;

  friend bool operator==(const CostFunction& a, const CostFunction& b);

 private:
  struct GridData;

  CostForm form_ = CostForm::quadratic1d;
  std::size_t dim_ = 2;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::shared_ptr<const GridData> grid_;

  friend double cost_at(const CostFunction& c, const SimplexPoint& p);
  friend double cost_at_high_mass(const CostFunction& c, double h);
};

// Effective cost at p: the formula for quadratic1d, the lower convex envelope
// for grid costs (closed-form hull interpolation for two levels, an LP
// otherwise), +inf outside the hull of finite points.
double cost_at(const CostFunction& c, const SimplexPoint& p);

// cost_at for two-level costs, parameterised by the high-output mass h.
double cost_at_high_mass(const CostFunction& c, double h);

// Envelope value min sum l_j v_j s.t. sum l_j p_j = p, l >= 0, solved as an
// LP over the finite points. Independent of the hull route used by cost_at
// for two levels.
double envelope_by_lp(std::span<const CostPoint> points, const SimplexPoint& p);

}  // namespace mhp
