#pragma once

// Independent brute-force oracles used only by the tests.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "cosets/permutation.hpp"

namespace cosets::oracle {

/// All elements of <gens> by breadth-first closure under right
/// multiplication.  No stabilizer chain involved.
inline std::vector<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::unordered_set<Permutation, PermutationHash> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      Permutation next = queue[i] * s;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline bool contains(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace cosets::oracle
