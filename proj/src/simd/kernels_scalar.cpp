#include "kernels_impl.hpp"

namespace cosets::simd::detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint8_t>((dst[i] + static_cast<unsigned>(coeff) * src[i]) % p);
}

}  // namespace cosets::simd::detail
