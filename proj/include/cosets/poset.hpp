#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cosets {

/// Finite poset on elements 0..n-1, stored as the strict up-sets.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// From strict relations u < v; the transitive closure is taken.
  /// Throws PreconditionError if the relation has a cycle.
  static FinitePoset from_relations(std::size_t size, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& less);

  /// From already transitive up-sets (each sorted, strictly above).
  static FinitePoset from_up_sets(std::vector<std::vector<std::uint32_t>> above);

  static FinitePoset antichain(std::size_t size);

  std::size_t size() const noexcept { return above_.size(); }
  const std::vector<std::uint32_t>& above(std::uint32_t v) const noexcept { return above_[v]; }
  bool less(std::uint32_t u, std::uint32_t v) const;

  /// Elements listed so that u < v implies u comes first.
  const std::vector<std::uint32_t>& linear_extension() const noexcept { return order_; }

  std::size_t relation_count() const;
  bool is_antichain() const { return relation_count() == 0; }

 private:
  std::vector<std::vector<std::uint32_t>> above_;
  std::vector<std::uint32_t> order_;
};

}  // namespace cosets
