#include "cosets/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cosets/errors.hpp"
#include "cosets/simd.hpp"

namespace cosets {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) noexcept {
  std::uint64_t bit = std::uint64_t{1} << (c & 63);
  if (v) row(r)[c >> 6] |= bit;
  else row(r)[c >> 6] &= ~bit;
}

GfpMatrix::GfpMatrix(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p > 255) throw PreconditionError("GF(p) matrices need 2 <= p < 256");
}

void GfpMatrix::set(std::size_t r, std::size_t c, long long v) noexcept {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  data_[r * cols_ + c] = static_cast<std::uint8_t>(m);
}

unsigned inverse_mod(unsigned a, unsigned p) {
  // Fermat: a^(p-2).
  unsigned result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank(Gf2Matrix& m) {
  const auto& k = simd::active();
  const std::size_t words = m.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::size_t pivot = r;
    while (pivot < m.rows() && !(m.row(pivot)[w] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot), m.row(pivot) + words, m.row(r));
    const std::uint64_t* src = m.row(r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      std::uint64_t* dst = m.row(i);
      if (dst[w] & bit) k.xor_words(dst + w, src + w, words - w);
    }
    ++r;
  }
  return r;
}

std::size_t rank(GfpMatrix& m) {
  const auto& k = simd::active();
  const unsigned p = m.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.get(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols(), m.row(r));
    const unsigned inv = inverse_mod(m.get(r, c), p);
    const std::uint8_t* src = m.row(r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      std::uint8_t* dst = m.row(i);
      if (dst[c] == 0) continue;
      // dst -= (dst[c]/pivot) * src, i.e. dst += (p - factor) * src.
      const unsigned factor = dst[c] * inv % p;
      k.axpy_mod(dst + c, src + c, static_cast<std::uint8_t>(p - factor), static_cast<std::uint8_t>(p), m.cols() - c);
    }
    ++r;
  }
  return r;
}

std::size_t rank(std::span<const SparseRow> rows, std::size_t cols, unsigned p) {
  // Eliminate in the orientation with fewer rows.
  const bool transpose = cols < rows.size();
  const std::size_t nr = transpose ? cols : rows.size();
  const std::size_t nc = transpose ? rows.size() : cols;
  // Dense storage: one bit per entry over GF(2), one byte otherwise; cap at 512 MiB.
  const long double entries = static_cast<long double>(nr) * static_cast<long double>(nc);
  if (entries > (p == 2 ? 4294967296.0L : 536870912.0L))
    throw BudgetError("boundary matrix " + std::to_string(nr) + " x " + std::to_string(nc) + " exceeds the dense elimination budget");
  if (p == 2) {
    Gf2Matrix m(nr, nc);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto [c, v] : rows[i])
        if (v % 2 != 0) transpose ? m.flip(c, i) : m.flip(i, c);
    return rank(m);
  }
  GfpMatrix m(nr, nc, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto [c, v] : rows[i]) {
      std::size_t rr = transpose ? c : i, cc = transpose ? i : c;
      m.set(rr, cc, static_cast<long long>(m.get(rr, cc)) + v);
    }
  return rank(m);
}

}  // namespace cosets
