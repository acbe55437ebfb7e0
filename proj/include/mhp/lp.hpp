#pragma once

#include <cstddef>
#include <vector>

namespace mhp {

// min objective . x  subject to  constraints x = rhs,  x >= 0.
// constraints is row-major, one inner vector per equality row.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> constraints;
  std::vector<double> rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> solution;
  std::size_t iterations = 0;
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-11;
  double reduced_cost_tol = 1e-11;
  std::size_t max_iterations = 100000;
};

// Dense two-phase tableau simplex with Bland's smallest-index rule.
// Throws InputError on inconsistent dimensions and std::logic_error if the
// iteration cap is reached (Bland's rule cannot cycle, so that means a bug or
// a numerically hopeless input).
LpResult solve_lp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace mhp
