#include "mhp/kernels.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

#include "mhp/errors.hpp"

namespace mhp::kernels {

PointPack PointPack::build(std::size_t dim, std::span<const std::vector<double>> points,
                           std::span<const double> weights) {
  if (points.size() != weights.size()) throw InputError("point pack: size mismatch");
  PointPack pack;
  pack.dim = dim;
  pack.count = points.size();
  pack.stride = (pack.count + 3) / 4 * 4;
  pack.coords.assign(dim * pack.stride, 0.0);
  pack.weights.assign(pack.stride, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < pack.count; ++j) {
    if (points[j].size() != dim) throw InputError("point pack: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) pack.coords[i * pack.stride + j] = points[j][i];
    pack.weights[j] = weights[j];
  }
  return pack;
}

namespace {

// -1: not forced; otherwise static_cast<int>(Isa).
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() {
#if defined(MHP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

void check_args(const PointPack& pack, std::span<const double> f) {
  if (f.size() != pack.dim) throw DomainError("kernel: utility vector dimension mismatch");
  if (pack.count == 0) throw InputError("kernel: empty point set");
}

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("requested ISA is not available");
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

Extremum max_affine(const PointPack& pack, std::span<const double> f) {
  check_args(pack, f);
  return active_isa() == Isa::avx2 ? avx2::max_affine(pack, f) : scalar::max_affine(pack, f);
}

Extremum min_affine(const PointPack& pack, std::span<const double> f) {
  check_args(pack, f);
  return active_isa() == Isa::avx2 ? avx2::min_affine(pack, f) : scalar::min_affine(pack, f);
}

#if !defined(MHP_HAVE_AVX2)
namespace avx2 {
Extremum max_affine(const PointPack&, std::span<const double>) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
Extremum min_affine(const PointPack&, std::span<const double>) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

}  // namespace mhp::kernels
