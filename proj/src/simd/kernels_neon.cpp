#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace cosets::simd::detail {

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

// Same Barrett scheme as the AVX2 variant, eight 16-bit lanes at a time.
void axpy_mod_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n) {
  const uint8x8_t c = vdup_n_u8(coeff);
  const uint16x8_t mod = vdupq_n_u16(p);
  const uint16x4_t magic = vdup_n_u16(static_cast<std::uint16_t>(65536u / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t x = vmlal_u8(vmovl_u8(vld1_u8(dst + i)), vld1_u8(src + i), c);
    uint32x4_t lo = vmull_u16(vget_low_u16(x), magic);
    uint32x4_t hi = vmull_u16(vget_high_u16(x), magic);
    uint16x8_t q = vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
    uint16x8_t r = vmlsq_u16(x, q, mod);
    r = vminq_u16(r, vsubq_u16(r, mod));
    r = vminq_u16(r, vsubq_u16(r, mod));
    vst1_u8(dst + i, vmovn_u16(r));
  }
  axpy_mod_scalar(dst + i, src + i, coeff, p, n - i);
}

}  // namespace cosets::simd::detail
