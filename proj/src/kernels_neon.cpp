#include "dglevel/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace dgl::kernels {

namespace {

inline uint32x4_t reduce4(uint32x4_t t, float64x2_t inv_p, uint32x4_t p_vec) {
  float64x2_t lo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(t)));
  float64x2_t hi = vcvtq_f64_u64(vmovl_u32(vget_high_u32(t)));
  lo = vrndmq_f64(vmulq_f64(lo, inv_p));
  hi = vrndmq_f64(vmulq_f64(hi, inv_p));
  uint32x4_t q = vcombine_u32(vmovn_u64(vcvtq_u64_f64(lo)), vmovn_u64(vcvtq_u64_f64(hi)));
  uint32x4_t r = vsubq_u32(t, vmulq_u32(q, p_vec));
  // q is exact or one too small, never too large, so r stays in [0, 2p).
  uint32x4_t big = vcgeq_u32(r, p_vec);
  return vsubq_u32(r, vandq_u32(big, p_vec));
}

}  // namespace

void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const float64x2_t inv_p = vdupq_n_f64(1.0 / static_cast<double>(p));
  const uint32x4_t p_vec = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t t = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c);
    vst1q_u32(dst + i, reduce4(t, inv_p, p_vec));
  }
  axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

void scale_mod_neon(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const float64x2_t inv_p = vdupq_n_f64(1.0 / static_cast<double>(p));
  const uint32x4_t p_vec = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_u32(row + i, reduce4(vmulq_n_u32(vld1q_u32(row + i), c), inv_p, p_vec));
  scale_mod_scalar(row + i, c, n - i, p);
}

}  // namespace dgl::kernels

#endif
