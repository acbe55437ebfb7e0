#include "mhp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhp/errors.hpp"

namespace mhp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), width_(cols + 1), cells_(rows * width_, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }
  double& rhs(std::size_t i) { return at(i, width_ - 1); }
  double rhs(std::size_t i) const { return at(i, width_ - 1); }
  std::size_t rows() const { return rows_; }
  std::size_t rhs_col() const { return width_ - 1; }

  void erase_row(std::size_t i) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i * width_),
                 cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * width_));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t width_;
  std::vector<double> cells_;
};

struct Simplex {
  Tableau t;
  std::vector<double> z;  // reduced costs; z[rhs_col] = -objective
  std::vector<std::size_t> basis;
  const LpOptions& opt;
  std::size_t iterations = 0;

  void pivot(std::size_t r, std::size_t col) {
    const double pv = t.at(r, col);
    const std::size_t w = t.rhs_col() + 1;
    for (std::size_t j = 0; j < w; ++j) t.at(r, j) /= pv;
    t.at(r, col) = 1.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      const double factor = t.at(i, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) t.at(i, j) -= factor * t.at(r, j);
      t.at(i, col) = 0.0;
    }
    const double zf = z[col];
    if (zf != 0.0) {
      for (std::size_t j = 0; j < w; ++j) z[j] -= zf * t.at(r, j);
      z[col] = 0.0;
    }
    basis[r] = col;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool run(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (z[j] < -opt.reduced_cost_tol) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;

      // Minimum ratio, then the smallest basic index among (near-)ties.
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < t.rows(); ++i) {
        const double a = t.at(i, enter);
        if (a > opt.pivot_tol) best = std::min(best, std::max(0.0, t.rhs(i)) / a);
      }
      std::size_t leave = t.rows();
      const double slack = 1e-12 * (1.0 + best);
      for (std::size_t i = 0; i < t.rows(); ++i) {
        const double a = t.at(i, enter);
        if (a <= opt.pivot_tol) continue;
        if (std::max(0.0, t.rhs(i)) / a <= best + slack &&
            (leave == t.rows() || basis[i] < basis[leave]))
          leave = i;
      }
      if (leave == t.rows()) return false;
      pivot(leave, enter);
      if (++iterations > opt.max_iterations)
        throw std::logic_error("solve_lp: iteration limit reached");
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const LpOptions& opt) {
  const std::size_t m = lp.constraints.size();
  const std::size_t n = lp.objective.size();
  if (lp.rhs.size() != m) throw InputError("solve_lp: rhs size does not match constraint rows");
  for (const auto& row : lp.constraints)
    if (row.size() != n) throw InputError("solve_lp: constraint row width does not match objective");

  LpResult result;
  if (m == 0) {
    for (double c : lp.objective) {
      if (c < 0.0) {
        result.status = LpStatus::unbounded;
        return result;
      }
    }
    result.status = LpStatus::optimal;
    result.solution.assign(n, 0.0);
    return result;
  }

  // Columns: n structural, m artificial.
  Simplex s{Tableau(m, n + m), std::vector<double>(n + m + 1, 0.0), std::vector<std::size_t>(m), opt};
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) s.t.at(i, j) = sign * lp.constraints[i][j];
    s.t.at(i, n + i) = 1.0;
    s.t.rhs(i) = sign * lp.rhs[i];
    s.basis[i] = n + i;
    scale = std::max(scale, std::abs(lp.rhs[i]));
  }

  // Phase 1: minimise the sum of artificials.
  const std::size_t rc = s.t.rhs_col();
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += s.t.at(i, j);
    s.z[j] = -acc;
  }
  {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += s.t.rhs(i);
    s.z[rc] = -acc;
  }
  s.run(n + m);
  if (-s.z[rc] > opt.feasibility_tol * scale) {
    result.status = LpStatus::infeasible;
    result.iterations = s.iterations;
    return result;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and get dropped.
  for (std::size_t i = 0; i < s.t.rows();) {
    if (s.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    double best = opt.pivot_tol;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(s.t.at(i, j)) > best) {
        best = std::abs(s.t.at(i, j));
        col = j;
      }
    }
    if (col < n) {
      s.pivot(i, col);
      ++i;
    } else {
      s.t.erase_row(i);
      s.basis.erase(s.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 on the structural columns.
  std::fill(s.z.begin(), s.z.end(), 0.0);
  for (std::size_t j = 0; j < n; ++j) s.z[j] = lp.objective[j];
  for (std::size_t i = 0; i < s.t.rows(); ++i) {
    const double cb = lp.objective[s.basis[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= rc; ++j) {
      if (j >= n && j < rc) continue;
      s.z[j] -= cb * s.t.at(i, j);
    }
  }
  const bool bounded = s.run(n);
  result.iterations = s.iterations;
  if (!bounded) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.solution.assign(n, 0.0);
  for (std::size_t i = 0; i < s.t.rows(); ++i) result.solution[s.basis[i]] = std::max(0.0, s.t.rhs(i));
  result.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * result.solution[j];
  return result;
}

}  // namespace mhp
