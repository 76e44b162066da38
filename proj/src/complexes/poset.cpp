#include "cosets/poset.hpp"

#include <algorithm>

#include "cosets/errors.hpp"

namespace cosets {

namespace {

std::vector<std::uint32_t> topological_order(const std::vector<std::vector<std::uint32_t>>& succ) {
  std::vector<std::size_t> indeg(succ.size(), 0);
  for (const auto& s : succ)
    for (auto v : s) ++indeg[v];
  std::vector<std::uint32_t> order;
  for (std::uint32_t v = 0; v < succ.size(); ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto v : succ[order[i]])
      if (--indeg[v] == 0) order.push_back(v);
  if (order.size() != succ.size()) throw PreconditionError("poset relation contains a cycle");
  return order;
}

}  // namespace

FinitePoset FinitePoset::from_relations(std::size_t size, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& less) {
  std::vector<std::vector<std::uint32_t>> succ(size);
  for (auto [u, v] : less) {
    if (u >= size || v >= size) throw PreconditionError("poset relation refers to a missing element");
    if (u == v) throw PreconditionError("poset relation must be strict");
    succ[u].push_back(v);
  }
  const auto order = topological_order(succ);
  std::vector<std::vector<std::uint32_t>> above(size);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& up = above[*it];
    for (auto v : succ[*it]) {
      up.push_back(v);
      up.insert(up.end(), above[v].begin(), above[v].end());
    }
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
  }
  FinitePoset p;
  p.above_ = std::move(above);
  p.order_ = order;
  return p;
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::vector<std::uint32_t>> above) {
  for (std::uint32_t v = 0; v < above.size(); ++v) {
    auto& up = above[v];
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
    for (auto w : up)
      if (w >= above.size() || w == v) throw PreconditionError("invalid up-set");
  }
  FinitePoset p;
  p.order_ = topological_order(above);
  p.above_ = std::move(above);
  return p;
}

FinitePoset FinitePoset::antichain(std::size_t size) { return from_up_sets(std::vector<std::vector<std::uint32_t>>(size)); }

bool FinitePoset::less(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(above_[u].begin(), above_[u].end(), v);
}

std::size_t FinitePoset::relation_count() const {
  std::size_t n = 0;
  for (const auto& up : above_) n += up.size();
  return n;
}

}  // namespace cosets
