#include "dglevel/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dgl::kernels {

namespace {

// Reduces eight lanes t in [0, 2^31) modulo p through a double-precision
// quotient estimate. The estimate is exact or one too small, so one
// conditional subtraction finishes the job; the add-back covers rounding
// in the other direction.
__attribute__((target("avx2"))) inline __m256i reduce8(__m256i t, __m256d inv_p, __m256i p_vec) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(t));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(t, 1));
  lo = _mm256_floor_pd(_mm256_mul_pd(lo, inv_p));
  hi = _mm256_floor_pd(_mm256_mul_pd(hi, inv_p));
  __m256i q = _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p_vec));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, p_vec));
  __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p_vec, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(big, p_vec));
}

}  // namespace

__attribute__((target("avx2")))
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, c_vec));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(t, inv_p, p_vec));
  }
  axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

__attribute__((target("avx2")))
void scale_mod_avx2(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), reduce8(_mm256_mullo_epi32(v, c_vec), inv_p, p_vec));
  }
  scale_mod_scalar(row + i, c, n - i, p);
}

}  // namespace dgl::kernels

#endif
