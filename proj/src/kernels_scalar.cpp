#include <limits>

#include "mhp/kernels.hpp"

namespace mhp::kernels::scalar {

namespace {

double dot_at(const PointPack& pack, std::span<const double> f, std::size_t j) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pack.dim; ++i) acc = acc + f[i] * pack.coords[i * pack.stride + j];
  return acc;
}

}  // namespace

Extremum max_affine(const PointPack& pack, std::span<const double> f) {
  Extremum best{-std::numeric_limits<double>::infinity(), 0};
  for (std::size_t j = 0; j < pack.count; ++j) {
    const double r = dot_at(pack, f, j) - pack.weights[j];
    if (r > best.value) best = {r, j};
  }
  return best;
}

Extremum min_affine(const PointPack& pack, std::span<const double> f) {
  Extremum best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t j = 0; j < pack.count; ++j) {
    const double r = dot_at(pack, f, j) + pack.weights[j];
    if (r < best.value) best = {r, j};
  }
  return best;
}

}  // namespace mhp::kernels::scalar
