#include <immintrin.h>

#include <limits>

#include "mhp/kernels.hpp"

namespace mhp::kernels::avx2 {

namespace {

// Four points per step. Each lane accumulates its dot product in the same
// order as the scalar path (mul then add, no FMA), and keeps the first index
// at which its running extremum was reached. The final lane reduction breaks
// value ties by the lowest index, which matches the scalar scan.
template <bool Max>
__attribute__((target("avx2"))) Extremum affine_extremum(const PointPack& pack,
                                                         std::span<const double> f) {
  const double init = Max ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
  __m256d best = _mm256_set1_pd(init);
  __m256i best_idx = _mm256_set1_epi64x(0);
  __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
  const __m256i step = _mm256_set1_epi64x(4);

  for (std::size_t j = 0; j < pack.stride; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < pack.dim; ++i) {
      const __m256d fi = _mm256_set1_pd(f[i]);
      const __m256d p = _mm256_loadu_pd(&pack.coords[i * pack.stride + j]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(fi, p));
    }
    const __m256d v = _mm256_loadu_pd(&pack.weights[j]);
    const __m256d r = Max ? _mm256_sub_pd(acc, v) : _mm256_add_pd(acc, v);
    const __m256d better = Max ? _mm256_cmp_pd(r, best, _CMP_GT_OQ) : _mm256_cmp_pd(r, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, r, better);
    best_idx = _mm256_castpd_si256(
        _mm256_blendv_pd(_mm256_castsi256_pd(best_idx), _mm256_castsi256_pd(idx), better));
    idx = _mm256_add_epi64(idx, step);
  }

  alignas(32) double vals[4];
  alignas(32) long long inds[4];
  _mm256_store_pd(vals, best);
  _mm256_store_si256(reinterpret_cast<__m256i*>(inds), best_idx);
  Extremum out{vals[0], static_cast<std::size_t>(inds[0])};
  for (int l = 1; l < 4; ++l) {
    const auto li = static_cast<std::size_t>(inds[l]);
    const bool improves = Max ? vals[l] > out.value : vals[l] < out.value;
    if (improves || (vals[l] == out.value && li < out.index)) out = {vals[l], li};
  }
  return out;
}

}  // namespace

Extremum max_affine(const PointPack& pack, std::span<const double> f) {
  return affine_extremum<true>(pack, f);
}

Extremum min_affine(const PointPack& pack, std::span<const double> f) {
  return affine_extremum<false>(pack, f);
}

}  // namespace mhp::kernels::avx2
