#include "mhp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mhp/errors.hpp"

namespace mhp {

SimplexPoint::SimplexPoint(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InputError("simplex point needs at least one coordinate");
  double total = 0.0;
  for (double& x : probs_) {
    if (!std::isfinite(x) || x < -tol) throw InputError("simplex coordinates must be non-negative");
    if (x < tol && x > -tol) x = std::max(x, 0.0);
    total += x;
  }
  if (std::abs(total - 1.0) > tol) throw InputError("simplex coordinates must sum to 1");
}

SimplexPoint SimplexPoint::binary(double high_mass) {
  return SimplexPoint({1.0 - high_mass, high_mass});
}

SimplexPoint SimplexPoint::vertex(std::size_t n, std::size_t i) {
  std::vector<double> probs(n, 0.0);
  probs.at(i) = 1.0;
  return SimplexPoint(std::move(probs));
}

std::size_t simplex_grid_size(std::size_t n, std::size_t m) {
  if (n == 0) throw InputError("simplex dimension must be at least 1");
  // C(m + n - 1, n - 1) by the multiplicative formula; each prefix is an
  // exact binomial coefficient.
  const std::size_t k = n - 1;
  std::size_t count = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = m + i;
    if (count > std::numeric_limits<std::size_t>::max() / factor)
      throw SizeError("simplex grid size overflows");
    count = count * factor / i;
  }
  return count;
}

std::vector<SimplexPoint> simplex_grid(std::size_t n, std::size_t m, std::size_t max_points) {
  if (m == 0) throw InputError("simplex grid resolution must be at least 1");
  const std::size_t count = simplex_grid_size(n, m);
  if (count > max_points) throw SizeError("simplex grid has too many points");

  std::vector<SimplexPoint> out;
  out.reserve(count);
  const double scale = static_cast<double>(m);
  // Compositions in lexicographic order, starting from (0, ..., 0, m). The
  // successor increments the rightmost non-final slot that still has mass to
  // its right and moves the rest of that mass into the final slot.
  std::vector<std::size_t> k(n, 0);
  k[n - 1] = m;
  while (true) {
    std::vector<double> probs(n);
    for (std::size_t i = 0; i < n; ++i) probs[i] = static_cast<double>(k[i]) / scale;
    out.emplace_back(std::move(probs));

    if (n == 1) break;
    // i: rightmost slot below the last with tail = k[i+1] + ... + k[n-1] > 0
    std::size_t i = n - 2;
    std::size_t tail = k[n - 1];
    while (tail == 0) {
      if (i == 0) return out;
      tail += k[i];
      --i;
    }
    ++k[i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) k[j] = 0;
    k[n - 1] = tail - 1;
  }
  return out;
}

bool fosd(const SimplexPoint& p, const SimplexPoint& q, double tol) {
  if (p.size() != q.size()) throw DomainError("fosd: dimension mismatch");
  double cp = 0.0;
  double cq = 0.0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    cp += p[k];
    cq += q[k];
    if (cp > cq + tol) return false;
  }
  return true;
}

double dot(std::span<const double> f, const SimplexPoint& p) {
  if (f.size() != p.size()) throw DomainError("dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * p[i];
  return acc;
}

}  // namespace mhp
