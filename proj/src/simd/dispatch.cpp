#include <cstdlib>
#include <string>

#include "cosets/simd.hpp"
#include "kernels_impl.hpp"

namespace cosets::simd {

namespace {

constexpr Kernels kScalar{Isa::Scalar, detail::xor_words_scalar, detail::axpy_mod_scalar};
#if defined(COSETS_HAVE_AVX2)
constexpr Kernels kAvx2{Isa::Avx2, detail::xor_words_avx2, detail::axpy_mod_avx2};
#endif
#if defined(COSETS_HAVE_NEON)
constexpr Kernels kNeon{Isa::Neon, detail::xor_words_neon, detail::axpy_mod_neon};
#endif

const Kernels* best_available() {
  const Kernels* choice = &kScalar;
  for (const Kernels* k : available_kernels()) choice = k;
  const char* env = std::getenv("COSETS_SIMD");
  if (env != nullptr) {
    std::string wanted(env);
    for (const Kernels* k : available_kernels())
      if (name(k->isa) == wanted) return k;
  }
  return choice;
}

const Kernels*& current() {
  static const Kernels* k = best_available();
  return k;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&kScalar};
#if defined(COSETS_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) out.push_back(&kAvx2);
#endif
#if defined(COSETS_HAVE_NEON)
  out.push_back(&kNeon);
#endif
  return out;
}

const Kernels& active() { return *current(); }

bool select(Isa isa) {
  for (const Kernels* k : available_kernels())
    if (k->isa == isa) {
      current() = k;
      return true;
    }
  return false;
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

}  // namespace cosets::simd
