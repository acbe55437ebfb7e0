#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mhp/tolerances.hpp"

namespace mhp {

// A probability distribution over the n output levels.
class SimplexPoint {
 public:
  // Throws InputError unless entries are >= -tol and sum to 1 within tol.
  // Entries within tol of zero are clamped to zero.
  explicit SimplexPoint(std::vector<double> probs, double tol = kTol.equality);

  // Two-level shorthand: (1 - high_mass, high_mass).
  static SimplexPoint binary(double high_mass);
  static SimplexPoint vertex(std::size_t n, std::size_t i);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  // Probability of the highest output level.
  double high_mass() const { return probs_.back(); }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<double> probs_;
};

// All points with coordinates k_i / m, k_i >= 0, sum k_i = m, in
// lexicographic order of (k_1, ..., k_n). Throws SizeError when the count
// C(m + n - 1, n - 1) exceeds max_points or overflows.
std::vector<SimplexPoint> simplex_grid(std::size_t n, std::size_t m,
                                       std::size_t max_points = 10'000'000);

// Number of points simplex_grid(n, m) would return; SizeError on overflow.
std::size_t simplex_grid_size(std::size_t n, std::size_t m);

// p first-order stochastically dominates q: every lower cumulative mass of p
// is at most that of q.
bool fosd(const SimplexPoint& p, const SimplexPoint& q, double tol = kTol.equality);

double dot(std::span<const double> f, const SimplexPoint& p);

}  // namespace mhp
