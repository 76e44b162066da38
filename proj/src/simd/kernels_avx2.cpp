// Compiled with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace cosets::simd::detail {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
    __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a0, b0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(a1, b1));
  }
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

// 16 lanes of 16 bits: x = d + c*s < 2^16, then Barrett reduction with
// m = floor(2^16 / p).  The quotient estimate is short by at most one, so
// r < 2p before the corrections.
void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n) {
  const __m256i c = _mm256_set1_epi16(coeff);
  const __m256i mod = _mm256_set1_epi16(p);
  const __m256i magic = _mm256_set1_epi16(static_cast<short>(static_cast<std::uint16_t>(65536u / p)));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i d = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256i s = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256i x = _mm256_add_epi16(d, _mm256_mullo_epi16(s, c));
    __m256i q = _mm256_mulhi_epu16(x, magic);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, mod));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, mod));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, mod));
    __m256i packed = _mm256_permute4x64_epi64(_mm256_packus_epi16(r, r), 0x08);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_castsi256_si128(packed));
  }
  axpy_mod_scalar(dst + i, src + i, coeff, p, n - i);
}

}  // namespace cosets::simd::detail
