#pragma once

// Coset posets C(G) and C(G, N) over a subgroup family, and the action of
// triples (g, h, alpha) on them:  Hx -> (g^-1 H x h)^alpha.
//
// The family is whatever the SubgroupLattice holds.  Over a complete lattice
// this is the full coset poset.  Over the overgroups of some P it is the
// sub-poset of cosets of subgroups containing P, which is where every
// vertex fixed by left translations from P lives.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "cosets/lattice.hpp"
#include "cosets/poset.hpp"

namespace cosets {

struct CosetVertex {
  std::uint32_t subgroup;  // lattice index
  ElementId rep;           // smallest element id in the coset
  friend bool operator==(const CosetVertex&, const CosetVertex&) = default;
};

/// Conjugation by an element c of some overgroup, restricted to G.
class OvergroupAutomorphism {
 public:
  /// Throws PreconditionError unless c lies in the overgroup and G^c = G.
  OvergroupAutomorphism(GeneratedGroup overgroup, Permutation c, const GeneratedGroup& g);
  /// The identity automorphism of G (conjugation by 1 inside G).
  static OvergroupAutomorphism identity(const GeneratedGroup& g);

  const GeneratedGroup& overgroup() const noexcept { return overgroup_; }
  const Permutation& conjugator() const noexcept { return c_; }
  Permutation operator()(const Permutation& x) const { return conjugate(x, c_); }
  GeneratedGroup operator()(const GeneratedGroup& h) const { return conjugate_group(h, c_); }

 private:
  GeneratedGroup overgroup_;
  Permutation c_;
};

/// (g, h, alpha) acting by Hx -> (g^-1 H x h)^alpha, alpha = conjugation by c.
struct ActionTriple {
  Permutation g, h, c;

  static ActionTriple identity(std::size_t degree);
  static ActionTriple left(const Permutation& g);
  static ActionTriple right(const Permutation& h);
  static ActionTriple automorphism(const OvergroupAutomorphism& a);
  friend bool operator==(const ActionTriple&, const ActionTriple&) = default;
  friend auto operator<=>(const ActionTriple&, const ActionTriple&) = default;
};

/// Apply a first, then b.
ActionTriple compose(const ActionTriple& a, const ActionTriple& b);

/// A group of triples given by generators, with its element list as the
/// closure witness.
class ActionGroup {
 public:
  /// Throws BudgetError if the closure exceeds budget elements.
  explicit ActionGroup(std::vector<ActionTriple> generators, std::size_t budget = 1u << 20);

  const std::vector<ActionTriple>& generators() const noexcept { return generators_; }
  const std::vector<ActionTriple>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const ActionTriple& t) const;
  /// Every product of two elements is an element.
  bool is_closed() const;

 private:
  std::vector<ActionTriple> generators_;
  std::vector<ActionTriple> elements_;  // sorted
};

class CosetPoset {
 public:
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> shared_lattice() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<CosetVertex>& vertices() const noexcept { return vertices_; }
  const CosetVertex& vertex(std::size_t v) const { return vertices_[v]; }
  /// Subgroup indices present in the poset, ascending.
  const std::vector<std::uint32_t>& subgroups() const noexcept { return subgroups_; }

  /// The vertex Hx for H = lattice subgroup s, if H belongs to the poset.
  std::optional<std::uint32_t> vertex_of(std::uint32_t s, ElementId x) const;
  /// Elements of the coset, sorted.
  std::vector<ElementId> coset_elements(std::size_t v) const;

  const FinitePoset& order() const noexcept { return order_; }
  bool less(std::uint32_t u, std::uint32_t v) const { return order_.less(u, v); }
  std::size_t relation_count() const { return order_.relation_count(); }

  /// Image of every vertex under a triple; throws PreconditionError if some
  /// image is not a vertex of this poset.
  std::vector<std::uint32_t> image_map(const ActionTriple& t) const;

 private:
  friend CosetPoset build_coset_poset(const GeneratedGroup&, std::shared_ptr<const SubgroupLattice>);
  friend CosetPoset build_relative_poset(const GeneratedGroup&, const GeneratedGroup&, std::shared_ptr<const SubgroupLattice>);
  static CosetPoset build(std::shared_ptr<const SubgroupLattice> lattice, const std::vector<std::uint32_t>& subgroups);

  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<std::uint32_t> subgroups_;
  std::vector<std::int32_t> slot_;                // lattice index -> position in subgroups_, or -1
  std::vector<std::vector<std::uint32_t>> coset_;  // per slot: element id -> vertex
  std::vector<CosetVertex> vertices_;
  FinitePoset order_;
};

/// All cosets of proper subgroups in the lattice's family.
/// Throws MismatchError if the lattice is not a lattice of g.
CosetPoset build_coset_poset(const GeneratedGroup& g, std::shared_ptr<const SubgroupLattice> lattice);

/// Cosets Hx with HN = G.  Throws PreconditionError if N is not normal in G.
CosetPoset build_relative_poset(const GeneratedGroup& g, const GeneratedGroup& n, std::shared_ptr<const SubgroupLattice> lattice);

/// Cosets Hx with <P, K^(x^-1)> <= H.  Throws PreconditionError unless P, K <= G.
std::vector<std::uint32_t> translation_fixed_points(const CosetPoset& poset, const GeneratedGroup& p, const GeneratedGroup& k);

/// Vertices fixed by every generator of E.
std::vector<std::uint32_t> action_fixed_points(const CosetPoset& poset, const ActionGroup& e);
std::vector<std::uint32_t> action_fixed_points(const CosetPoset& poset, const std::vector<ActionTriple>& generators);

bool is_antichain(const CosetPoset& poset);

/// One line "order:representative" per vertex, a blank line, then one
/// "u v" line per cover relation u < v.
void dump_poset(std::ostream& os, const CosetPoset& poset);

}  // namespace cosets
