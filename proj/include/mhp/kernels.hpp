#pragma once

// Affine-extremum kernels over a packed set of simplex points.
//
// For points p_j with weights v_j these compute
//   max_j <f, p_j> - v_j      (moral-hazard value, convex conjugate)
//   min_j <f, p_j> + v_j      (malevolent-Nature value)
// and the lowest index attaining the extremum. The scalar path is the
// reference; the AVX2 path evaluates four points per step and returns
// bit-identical results (same operation order, no fused multiply-add).

#include <cstddef>
#include <span>
#include <vector>

namespace mhp::kernels {

enum class Isa { scalar, avx2 };

// Structure-of-arrays point set. coords[i * stride + j] is coordinate i of
// point j; stride is count rounded up to a multiple of 4 and padding slots
// carry zero coordinates and +inf weight.
struct PointPack {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::size_t stride = 0;
  std::vector<double> coords;
  std::vector<double> weights;

  static PointPack build(std::size_t dim, std::span<const std::vector<double>> points,
                         std::span<const double> weights);
};

struct Extremum {
  double value;
  std::size_t index;
};

Extremum max_affine(const PointPack& pack, std::span<const double> f);
Extremum min_affine(const PointPack& pack, std::span<const double> f);

bool isa_available(Isa isa);
// The ISA used by max_affine/min_affine: AVX2 when compiled in and supported
// by the CPU, unless overridden.
Isa active_isa();
// Pins dispatch to isa (must be available); used by equivalence tests.
void force_isa(Isa isa);
void reset_isa();

namespace scalar {
Extremum max_affine(const PointPack& pack, std::span<const double> f);
Extremum min_affine(const PointPack& pack, std::span<const double> f);
}  // namespace scalar

namespace avx2 {
Extremum max_affine(const PointPack& pack, std::span<const double> f);
Extremum min_affine(const PointPack& pack, std::span<const double> f);
}  // namespace avx2

}  // namespace mhp::kernels
