#pragma once

// Simplicial complexes with the empty face, order complexes, joins and
// reduced homology over prime fields.  Dimensions start at -1: index 0 of
// every f-vector or Betti vector refers to the empty face.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cosets/linalg.hpp"
#include "cosets/poset.hpp"

namespace cosets {

class SimplicialComplex {
 public:
  /// The complex {∅}.  The void complex (no faces) is not representable.
  SimplicialComplex() = default;

  /// Downward closure of the given faces on vertices 0..vertices-1.
  static SimplicialComplex from_faces(std::size_t vertices, const std::vector<std::vector<std::uint32_t>>& faces);

  /// Full simplex on n vertices.
  static SimplicialComplex simplex(std::size_t n);

  /// n isolated points.
  static SimplicialComplex points(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertices_; }
  /// Top dimension; -1 for {∅}.
  int dimension() const noexcept { return static_cast<int>(layers_.size()) - 1; }

  std::size_t face_count(int dim) const;
  /// f_{-1}, f_0, f_1, ...
  std::vector<std::size_t> f_vector() const;

  std::span<const std::uint32_t> face(int dim, std::size_t index) const;
  std::optional<std::size_t> find_face(int dim, std::span<const std::uint32_t> vertices) const;

  /// Checks that every codimension-one subface of every face is present.
  bool is_downward_closed() const;

 private:
  friend SimplicialComplex order_complex(const FinitePoset&);
  friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
  void sort_layers();

  std::size_t vertices_ = 0;
  // layers_[k]: flat, lexicographically sorted k-faces of k+1 vertices each.
  std::vector<std::vector<std::uint32_t>> layers_;
};

/// Chains of the poset as faces, plus ∅.  The empty poset gives {∅}.
SimplicialComplex order_complex(const FinitePoset& poset);

/// Faces S ∪ T; Y's vertices are renumbered after X's.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

/// Sum over k >= -1 of (-1)^k f_k.
long long reduced_euler_characteristic(const SimplicialComplex& x);

/// Reduced Betti numbers over GF(p).
struct BettiVector {
  unsigned prime = 2;
  std::vector<std::uint64_t> values;  // values[0] is dimension -1; trailing zeros trimmed

  std::uint64_t at(int dim) const;
  bool is_zero() const;
  /// Sum of (-1)^k beta_k.
  long long euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Rows are the k-faces, columns the (k-1)-faces, entry (-1)^i for the
/// face omitting vertex i.  k = 0 gives the augmentation row per vertex.
std::vector<SparseRow> boundary_rows(const SimplicialComplex& x, int k);

BettiVector reduced_betti(const SimplicialComplex& x, unsigned p);
bool is_acyclic(const SimplicialComplex& x, unsigned p);

/// beta_k(X*Y) = sum_{i+j=k-1} beta_i(X) beta_j(Y), indices from -1.
BettiVector kunneth_join_betti(const BettiVector& x, const BettiVector& y);

}  // namespace cosets
