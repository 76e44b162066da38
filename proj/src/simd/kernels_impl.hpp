#pragma once

#include <cstddef>
#include <cstdint>

namespace cosets::simd::detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n);

#if defined(COSETS_HAVE_AVX2)
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n);
#endif

#if defined(COSETS_HAVE_NEON)
void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n);
#endif

}  // namespace cosets::simd::detail
