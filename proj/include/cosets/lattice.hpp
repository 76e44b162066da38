#pragma once

// Subgroup lattices of small groups and the Möbius function mu(H, G).
//
// Elements of the parent group are numbered by a canonical enumeration
// (lexicographic order of image sequences, identity = 0).  Subgroups are
// sorted sequences of element numbers, so containment is sorted-sequence
// inclusion and subgroup identity is canonical.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cosets/group.hpp"

namespace cosets {

using ElementId = std::uint32_t;

/// Canonical numbering of the elements of a group, with multiplication.
class ElementTable {
 public:
  explicit ElementTable(const GeneratedGroup& group, std::uint64_t budget = kEnumerationBound);

  const GeneratedGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t degree() const noexcept { return degree_; }

  Permutation element(ElementId id) const;
  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws PreconditionError if p is not in the group.
  ElementId id(const Permutation& p) const;

  /// a * b (apply a first).
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const noexcept { return inverses_[a]; }
  /// g^-1 a g
  ElementId conj(ElementId a, ElementId g) const { return mul(mul(inverses_[g], a), g); }
  std::uint64_t order_of(ElementId a) const;

 private:
  std::optional<ElementId> find_images(const Point* images) const;

  GeneratedGroup group_;
  std::size_t degree_;
  std::size_t count_;
  std::vector<Point> flat_;                 // count_ x degree_
  std::vector<std::uint64_t> packed_keys_;  // degree <= 16: 4 bits per point, sorted
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;  // degree > 16
  std::vector<std::uint16_t> table_;        // full product table for small groups
  std::vector<ElementId> inverses_;
};

struct Subgroup {
  std::vector<ElementId> elements;    // sorted
  std::vector<ElementId> generators;  // witnesses
  std::vector<std::uint64_t> bits;    // membership bitset over element ids

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(ElementId e) const noexcept { return (bits[e >> 6] >> (e & 63)) & 1u; }
};

/// A family of subgroups of a group, ordered by (order, element list),
/// with the inclusion relation.  Either every subgroup (enumerate) or every
/// overgroup of a fixed subgroup (overgroups).  Both families are
/// upward closed, so intervals [H, G] agree with the full lattice.
class SubgroupLattice {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 1000;

  /// All subgroups, by closing the cyclic subgroups under joins.
  /// Throws BudgetError if |G| > max_order.
  static SubgroupLattice enumerate(const GeneratedGroup& g, std::uint64_t max_order = kDefaultMaxOrder);

  /// All H with P <= H <= G, by closing {P} under single-element extensions.
  static SubgroupLattice overgroups(const GeneratedGroup& g, const GeneratedGroup& p,
                                    std::uint64_t max_order = kEnumerationBound);

  const GeneratedGroup& parent() const noexcept { return table_->group(); }
  const ElementTable& table() const noexcept { return *table_; }
  std::shared_ptr<const ElementTable> shared_table() const noexcept { return table_; }

  bool complete() const noexcept { return complete_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }

  std::size_t index_of_parent() const noexcept { return subgroups_.size() - 1; }
  /// Only present in complete lattices (or when P is trivial).
  std::optional<std::size_t> index_of_trivial() const;

  /// H_i <= H_j.
  bool includes(std::size_t i, std::size_t j) const;
  const std::vector<std::uint32_t>& strictly_above(std::size_t i) const { return above_[i]; }
  const std::vector<std::uint32_t>& strictly_below(std::size_t i) const { return below_[i]; }

  std::optional<std::size_t> find(const std::vector<ElementId>& sorted_elements) const;
  /// Index of H_i^g, if it belongs to the family.
  std::optional<std::size_t> conjugate_index(std::size_t i, ElementId g) const;

  GeneratedGroup as_group(std::size_t i) const;
  /// Index of a GeneratedGroup that is a subgroup of the parent, if present.
  std::optional<std::size_t> locate(const GeneratedGroup& h) const;

  /// |H_i N| = |G| with N given by its index; |H N| = |H||N|/|H ∩ N|.
  bool product_is_parent(std::size_t i, std::size_t n) const;

 private:
  SubgroupLattice(std::shared_ptr<const ElementTable> table, std::vector<Subgroup> subgroups, bool complete);

  std::shared_ptr<const ElementTable> table_;
  std::vector<Subgroup> subgroups_;
  bool complete_;
  std::vector<std::vector<std::uint32_t>> above_, below_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash_;
};

struct MoebiusTable {
  std::vector<long long> mu_to_top;  // indexed like the lattice
};

/// mu(H, G) by the recursion mu(G, G) = 1, mu(H, G) = -sum_{H < K <= G} mu(K, G).
/// Throws Error on integer overflow.
MoebiusTable moebius_to_top(const SubgroupLattice& lattice);

/// Indices of subgroups covered only by G.
std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lattice);

/// One line per subgroup: "order;element ids;mu", in lattice order.
void dump_lattice(std::ostream& os, const SubgroupLattice& lattice, const MoebiusTable& mu);

}  // namespace cosets
