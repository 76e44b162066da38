#pragma once

// Row kernels for finite-field elimination.  Every kernel has a scalar
// reference implementation; vector variants are selected once at runtime
// from CPU features (override with COSETS_SIMD=scalar|avx2|neon) and are
// tested for bit-exact agreement with the scalar path.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cosets::simd {

enum class Isa { Scalar, Avx2, Neon };

struct Kernels {
  Isa isa;
  /// dst[i] ^= src[i]
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  /// dst[i] = (dst[i] + coeff * src[i]) mod p, entries already reduced, p < 256.
  void (*axpy_mod)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coeff, std::uint8_t p, std::size_t n);
};

const Kernels& scalar_kernels();

/// Variants compiled into this binary and supported by the running CPU.
std::vector<const Kernels*> available_kernels();

/// Kernels in use.
const Kernels& active();

/// Force a variant; returns false if it is unavailable.
bool select(Isa isa);

std::string_view name(Isa isa);

}  // namespace cosets::simd
