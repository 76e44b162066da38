#include <random>

#include "cosets/linalg.hpp"
#include "cosets/simd.hpp"
#include "doctest.h"

using namespace cosets;

namespace {

struct RestoreKernels {
  simd::Isa saved = simd::active().isa;
  ~RestoreKernels() { simd::select(saved); }
};

}  // namespace

TEST_CASE("scalar kernels are always available") {
  auto ks = simd::available_kernels();
  REQUIRE_FALSE(ks.empty());
  CHECK(ks.front()->isa == simd::Isa::Scalar);
  CHECK(simd::select(simd::Isa::Scalar));
  CHECK(simd::active().isa == simd::Isa::Scalar);
  RestoreKernels restore;
}

TEST_CASE("xor_words variants agree with the scalar reference") {
  std::mt19937_64 rng(42);
  for (const simd::Kernels* k : simd::available_kernels()) {
    CAPTURE(simd::name(k->isa));
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 257u}) {
      std::vector<std::uint64_t> a(n), b(n);
      for (auto& v : a) v = rng();
      for (auto& v : b) v = rng();
      auto expected = a, got = a;
      simd::scalar_kernels().xor_words(expected.data(), b.data(), n);
      k->xor_words(got.data(), b.data(), n);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("axpy_mod variants agree with the scalar reference") {
  std::mt19937 rng(9);
  for (const simd::Kernels* k : simd::available_kernels()) {
    CAPTURE(simd::name(k->isa));
    for (unsigned p : {2u, 3u, 5u, 7u, 13u, 101u, 251u}) {
      for (std::size_t n : {1u, 15u, 16u, 17u, 33u, 200u}) {
        std::vector<std::uint8_t> a(n), b(n);
        for (auto& v : a) v = static_cast<std::uint8_t>(rng() % p);
        for (auto& v : b) v = static_cast<std::uint8_t>(rng() % p);
        for (unsigned c = 0; c < p; c += (p > 20 ? 17 : 1)) {
          auto expected = a, got = a;
          simd::scalar_kernels().axpy_mod(expected.data(), b.data(), static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p), n);
          k->axpy_mod(got.data(), b.data(), static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(p), n);
          CHECK(got == expected);
        }
      }
    }
  }
}

TEST_CASE("axpy_mod scalar reference on extreme residues") {
  // Worst case for the Barrett estimate: every entry p-1.
  for (const simd::Kernels* k : simd::available_kernels())
    for (unsigned p : {3u, 251u}) {
      std::vector<std::uint8_t> a(40, static_cast<std::uint8_t>(p - 1)), b = a;
      k->axpy_mod(a.data(), b.data(), static_cast<std::uint8_t>(p - 1), static_cast<std::uint8_t>(p), a.size());
      const unsigned expected = ((p - 1) + (p - 1) * (p - 1)) % p;
      for (auto v : a) CHECK(v == expected);
    }
}

TEST_CASE("rank is identical under every kernel variant") {
  RestoreKernels restore;
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 20 + rng() % 150, cols = 20 + rng() % 300;
    std::vector<SparseRow> sparse(rows);
    for (auto& r : sparse)
      for (int e = 0; e < 4; ++e) r.emplace_back(rng() % cols, (rng() % 2) ? 1 : -1);
    for (unsigned p : {2u, 3u, 7u}) {
      std::vector<std::size_t> ranks;
      for (const simd::Kernels* k : simd::available_kernels()) {
        simd::select(k->isa);
        ranks.push_back(rank(sparse, cols, p));
      }
      for (auto r : ranks) CHECK(r == ranks.front());
    }
  }
}

TEST_CASE("rank over small fields") {
  // [[1,1],[1,1]] has rank 1; [[1,1],[1,-1]] has rank 2 over GF(3), 1 over GF(2).
  std::vector<SparseRow> same{{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  CHECK(rank(same, 2, 2) == 1);
  CHECK(rank(same, 2, 3) == 1);
  std::vector<SparseRow> diff{{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  CHECK(rank(diff, 2, 2) == 1);
  CHECK(rank(diff, 2, 3) == 2);
  CHECK(rank(std::vector<SparseRow>{}, 5, 2) == 0);
  CHECK(inverse_mod(3, 7) == 5);
}
