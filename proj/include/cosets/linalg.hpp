#pragma once

// Dense matrices over prime fields and rank by Gaussian elimination.
// GF(2) rows are packed 64 columns per word; odd primes use one byte per
// entry.  Row operations go through the runtime-selected SIMD kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cosets {

class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v) noexcept;
  void flip(std::size_t r, std::size_t c) noexcept { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

  std::uint64_t* row(std::size_t r) noexcept { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * words_; }

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

class GfpMatrix {
 public:
  GfpMatrix(std::size_t rows, std::size_t cols, unsigned p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned prime() const noexcept { return p_; }

  std::uint8_t get(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  /// Stores v reduced mod p; v may be negative.
  void set(std::size_t r, std::size_t c, long long v) noexcept;

  std::uint8_t* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const std::uint8_t* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }

 private:
  std::size_t rows_, cols_;
  unsigned p_;
  std::vector<std::uint8_t> data_;
};

/// Rank over GF(2); the matrix is consumed (reduced in place).
std::size_t rank(Gf2Matrix& m);

/// Rank over GF(p), p an odd prime below 256; the matrix is consumed.
std::size_t rank(GfpMatrix& m);

/// Sparse row: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::uint32_t, int>>;

/// Rank over GF(p) of a matrix given by sparse rows (any prime below 256).
/// Throws BudgetError if the dense working copy would exceed 512 MiB.
std::size_t rank(std::span<const SparseRow> rows, std::size_t cols, unsigned p);

/// Inverse of a nonzero residue mod p.
unsigned inverse_mod(unsigned a, unsigned p);

}  // namespace cosets
