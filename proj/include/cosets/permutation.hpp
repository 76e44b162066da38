#pragma once

// Permutations of {1..n}, stored 0-based.
//
// Composition convention: products are read left to right, i.e.
// compose(p, q) applies p first and then q.  This is the right-action
// convention: the image of point i under p*q is (i^p)^q, conjugation is
// p^g = g^-1 p g, and right cosets Hx = {h*x : h in H}.  Every module in
// this project uses this convention.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cosets {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// From 0-based images; throws PreconditionError unless a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// From 1-based images as they appear in the literature.
  static Permutation from_one_based(std::span<const int> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

/// Apply p first, then q. Throws MismatchError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// g^-1 p g.
Permutation conjugate(const Permutation& p, const Permutation& g);

/// p^k for any integer k.
Permutation power(const Permutation& p, long long k);

/// +1 or -1.
int sign(const Permutation& p);

/// Element order (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

/// Cycle lengths in decreasing order, fixed points included as 1s.
std::vector<std::size_t> cycle_type(const Permutation& p);

std::size_t fixed_point_count(const Permutation& p);

/// Extend to a larger degree, fixing the new points.
Permutation extend(const Permutation& p, std::size_t degree);

/// Relocate to points [offset, offset+deg(p)) of a permutation of `degree` points.
Permutation shift(const Permutation& p, std::size_t offset, std::size_t degree);

/// Cycle notation, 1-based: "(1,2,3)(4,5)"; identity is "()".
std::string to_cycle_string(const Permutation& p);

/// Parse cycle notation. Whitespace is ignored; "()" and "" are the identity.
/// Throws ParseError on malformed text or points outside 1..degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Parse a comma-separated list of cycle-notation permutations,
/// e.g. "(1,2),(1,2,3)". Commas inside parentheses separate points.
std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cosets
