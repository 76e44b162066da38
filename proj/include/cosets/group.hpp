#pragma once

// Permutation groups given by generators, backed by a deterministic
// base and strong generating set (Schreier-Sims).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cosets/exact.hpp"
#include "cosets/permutation.hpp"

namespace cosets {

/// Groups larger than this are never enumerated element by element.
inline constexpr std::uint64_t kEnumerationBound = 1'000'000;

/// Base and strong generating set with explicit transversals.
///
/// The base is chosen deterministically: the smallest moved point of the
/// first generator not yet accounted for, then the smallest point moved by
/// each sifted residue.  No randomization is used anywhere.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> generators;  // indices into strong generators
    std::vector<std::int32_t> slot;       // point -> transversal index, or -1
    std::vector<Point> orbit;
    std::vector<Permutation> reps;        // reps[k] maps base_point to orbit[k]
    std::vector<Permutation> rep_inverses;
  };

  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;
  BigInt order() const;

  /// Residue of sifting g, and the level where sifting stopped
  /// (levels().size() when g passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from_level = 0) const;

  bool contains(const Permutation& g) const;

 private:
  void rebuild_orbit(std::size_t level);
  void append_level(Point base_point);

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

class GeneratedGroup {
 public:
  /// Trivial group on one point.
  GeneratedGroup();

  /// Group generated by `generators`, all of degree `degree`.
  /// Deterministic in the generator sequence; identity generators are kept
  /// in generators() but ignored by the chain.
  GeneratedGroup(std::vector<Permutation> generators, std::size_t degree);

  static GeneratedGroup trivial(std::size_t degree) { return GeneratedGroup({}, degree); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::vector<Point> base() const { return chain_->base(); }
  const std::vector<Permutation>& strong_generators() const noexcept { return chain_->strong_generators(); }
  const StabilizerChain& chain() const noexcept { return *chain_; }

  const BigInt& order() const noexcept { return order_; }
  /// Order as a machine integer; throws BudgetError if it does not fit.
  std::uint64_t order_u64() const;

  bool is_trivial() const noexcept { return order_ == 1; }
  Permutation identity() const { return Permutation(degree_); }

  /// Throws MismatchError on degree mismatch.
  bool contains(const Permutation& p) const;

  bool is_subgroup_of(const GeneratedGroup& other) const;
  bool same_group(const GeneratedGroup& other) const;
  bool is_abelian() const;

  /// All elements, sorted lexicographically by image sequence (the identity
  /// comes first).  Throws BudgetError if the order exceeds `budget`.
  std::vector<Permutation> elements(std::uint64_t budget = kEnumerationBound) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  BigInt order_;
};

/// Convenience: group_from_generators(gens, degree).
GeneratedGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree);

/// Join <A, B> of two groups of the same degree.
GeneratedGroup join(const GeneratedGroup& a, const GeneratedGroup& b);

/// K^g = g^-1 K g.
GeneratedGroup conjugate_group(const GeneratedGroup& k, const Permutation& g);

/// Smallest normal subgroup of `group` containing `gens`.
GeneratedGroup normal_closure(const GeneratedGroup& group, const std::vector<Permutation>& gens);

/// True iff `sub` is a subgroup of `group` normalized by every generator.
bool is_normal_in(const GeneratedGroup& sub, const GeneratedGroup& group);

/// True iff g^-1 H g = H.
bool normalizes(const Permutation& g, const GeneratedGroup& h);

/// Orbits of the group on its points, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const GeneratedGroup& g);

/// Restriction of the group to an invariant set of points, relabelled
/// 0..|points|-1 in the order given.
GeneratedGroup restrict_to(const GeneratedGroup& g, const std::vector<Point>& points);

/// One Sylow p-subgroup, deterministic for a fixed generator sequence.
/// Returns the trivial group if p does not divide the order.
///
/// Strategy: split intransitive direct products along orbits; enumerate
/// groups within the enumeration bound and grow a p-subgroup by p-elements
/// of its normalizer; use the iterated wreath-product construction for full
/// symmetric and alternating groups beyond the bound.  Anything else beyond
/// the bound raises BudgetError.
GeneratedGroup sylow(const GeneratedGroup& g, std::uint64_t p);

/// Sylow p-subgroup of Sym(points), as iterated wreath products of C_p.
GeneratedGroup symmetric_sylow(std::size_t degree, const std::vector<Point>& points, std::uint64_t p);

/// Elements of `g` with sign +1.
GeneratedGroup even_part(const GeneratedGroup& g);

/// L^t acting on t disjoint blocks of deg(L) points.
GeneratedGroup direct_power(const GeneratedGroup& l, std::size_t copies);

/// Copy of x in block `block` of a permutation of copies*deg(x) points.
Permutation embed_in_block(const Permutation& x, std::size_t block, std::size_t copies);

/// The same x repeated in every block.
Permutation diagonal_element(const Permutation& x, std::size_t copies);

/// The i-th coordinate factor L_i of L^t.
GeneratedGroup block_factor(const GeneratedGroup& l, std::size_t block, std::size_t copies);

/// {(k,...,k) : k in K} inside L^t.
GeneratedGroup diagonal_embedding(const GeneratedGroup& k, std::size_t copies);

/// G/N realized as the action of G on the right cosets of N.
struct QuotientRepresentation {
  GeneratedGroup group;                      // on [G:N] points
  std::vector<Permutation> generator_images; // image of each generator of G
  std::vector<Permutation> transversal;      // coset representatives, point i <-> N*transversal[i]

  /// Image of an element of G.
  Permutation map(const Permutation& g, const GeneratedGroup& n) const;
};

/// Throws PreconditionError unless N is a normal subgroup of G.
QuotientRepresentation quotient_representation(const GeneratedGroup& g, const GeneratedGroup& n);

/// Minimal normal subgroups, in a deterministic order (by order, then by
/// least element).  Requires |G| > 1 and |G| within the enumeration bound.
std::vector<GeneratedGroup> minimal_normal_subgroups(const GeneratedGroup& g);

/// Factorization helpers shared by several modules.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
BigInt p_part(const BigInt& n, std::uint64_t p);

}  // namespace cosets
