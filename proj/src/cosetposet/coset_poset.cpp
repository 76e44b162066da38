#include "cosets/coset_poset.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "cosets/errors.hpp"

namespace cosets {

OvergroupAutomorphism::OvergroupAutomorphism(GeneratedGroup overgroup, Permutation c, const GeneratedGroup& g)
    : overgroup_(std::move(overgroup)), c_(std::move(c)) {
  if (!overgroup_.contains(c_)) throw PreconditionError("conjugator " + to_cycle_string(c_) + " is not in the overgroup");
  if (!g.is_subgroup_of(overgroup_)) throw PreconditionError("group is not contained in the overgroup");
  for (const auto& s : g.generators())
    if (!g.contains(conjugate(s, c_))) throw PreconditionError("conjugation by " + to_cycle_string(c_) + " does not normalize the group");
}

OvergroupAutomorphism OvergroupAutomorphism::identity(const GeneratedGroup& g) {
  return OvergroupAutomorphism(g, Permutation(g.degree()), g);
}

ActionTriple ActionTriple::identity(std::size_t degree) {
  return {Permutation(degree), Permutation(degree), Permutation(degree)};
}
ActionTriple ActionTriple::left(const Permutation& g) { return {g, Permutation(g.degree()), Permutation(g.degree())}; }
ActionTriple ActionTriple::right(const Permutation& h) { return {Permutation(h.degree()), h, Permutation(h.degree())}; }
ActionTriple ActionTriple::automorphism(const OvergroupAutomorphism& a) {
  const auto n = a.conjugator().degree();
  return {Permutation(n), Permutation(n), a.conjugator()};
}

ActionTriple compose(const ActionTriple& a, const ActionTriple& b) {
  // (g2^-1 (g1^-1 X h1)^c1 h2)^c2 = ((g1 g2')^-1 X h1 h2')^(c1 c2) with y' = c1 y c1^-1.
  const Permutation ci = inverse(a.c);
  return {a.g * conjugate(b.g, ci), a.h * conjugate(b.h, ci), a.c * b.c};
}

ActionGroup::ActionGroup(std::vector<ActionTriple> generators, std::size_t budget) : generators_(std::move(generators)) {
  if (generators_.empty()) throw PreconditionError("action group needs at least one generator");
  std::set<ActionTriple> seen{ActionTriple::identity(generators_.front().g.degree())};
  std::vector<ActionTriple> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : generators_) {
      ActionTriple next = compose(queue[i], s);
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw BudgetError("action group closure exceeds " + std::to_string(budget) + " elements");
        queue.push_back(std::move(next));
      }
    }
  elements_.assign(seen.begin(), seen.end());
}

bool ActionGroup::contains(const ActionTriple& t) const { return std::binary_search(elements_.begin(), elements_.end(), t); }

bool ActionGroup::is_closed() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!contains(compose(a, b))) return false;
  return true;
}

CosetPoset CosetPoset::build(std::shared_ptr<const SubgroupLattice> lattice, const std::vector<std::uint32_t>& subgroups) {
  CosetPoset cp;
  cp.lattice_ = std::move(lattice);
  const SubgroupLattice& lat = *cp.lattice_;
  const ElementTable& t = lat.table();
  cp.subgroups_ = subgroups;
  cp.slot_.assign(lat.size(), -1);
  cp.coset_.resize(subgroups.size());
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    const std::uint32_t s = subgroups[k];
    cp.slot_[s] = static_cast<std::int32_t>(k);
    auto& map = cp.coset_[k];
    map.assign(t.size(), unset);
    // Ascending scan: the first unassigned element is the smallest of its coset.
    for (ElementId x = 0; x < t.size(); ++x) {
      if (map[x] != unset) continue;
      const auto v = static_cast<std::uint32_t>(cp.vertices_.size());
      cp.vertices_.push_back({s, x});
      for (ElementId h : lat.subgroup(s).elements) map[t.mul(h, x)] = v;
    }
  }
  // Hx <= Ky iff H <= K and x lies in Ky.
  std::vector<std::vector<std::uint32_t>> above(cp.vertices_.size());
  for (std::uint32_t v = 0; v < cp.vertices_.size(); ++v) {
    const auto [s, x] = cp.vertices_[v];
    for (std::uint32_t k : lat.strictly_above(s))
      if (cp.slot_[k] >= 0) above[v].push_back(cp.coset_[static_cast<std::size_t>(cp.slot_[k])][x]);
  }
  cp.order_ = FinitePoset::from_up_sets(std::move(above));
  return cp;
}

std::optional<std::uint32_t> CosetPoset::vertex_of(std::uint32_t s, ElementId x) const {
  if (s >= slot_.size() || slot_[s] < 0) return std::nullopt;
  return coset_[static_cast<std::size_t>(slot_[s])][x];
}

std::vector<ElementId> CosetPoset::coset_elements(std::size_t v) const {
  const auto [s, x] = vertices_[v];
  const ElementTable& t = lattice_->table();
  std::vector<ElementId> out;
  for (ElementId h : lattice_->subgroup(s).elements) out.push_back(t.mul(h, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> CosetPoset::image_map(const ActionTriple& tr) const {
  const ElementTable& t = lattice_->table();
  const SubgroupLattice& lat = *lattice_;
  const ElementId g = t.id(tr.g);
  const ElementId h = t.id(tr.h);
  const ElementId gi = t.inv(g);
  // Element map of conjugation by c (c may lie outside G).
  std::vector<ElementId> by_c(t.size());
  for (ElementId e = 0; e < t.size(); ++e) {
    auto img = t.find(conjugate(t.element(e), tr.c));
    if (!img) throw PreconditionError("conjugation by " + to_cycle_string(tr.c) + " does not preserve the group");
    by_c[e] = *img;
  }
  // g^-1 H x h = H^g (g^-1 x h), then apply c to both parts.
  std::vector<std::uint32_t> sub_image(lat.size(), 0);
  for (std::uint32_t s : subgroups_) {
    std::vector<ElementId> elems;
    for (ElementId e : lat.subgroup(s).elements) elems.push_back(by_c[t.conj(e, g)]);
    std::sort(elems.begin(), elems.end());
    auto found = lat.find(elems);
    if (!found || slot_[*found] < 0) throw PreconditionError("action moves a subgroup out of the poset");
    sub_image[s] = static_cast<std::uint32_t>(*found);
  }
  std::vector<std::uint32_t> out(vertices_.size());
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    const auto [s, x] = vertices_[v];
    out[v] = *vertex_of(sub_image[s], by_c[t.mul(t.mul(gi, x), h)]);
  }
  return out;
}

namespace {

void check_family(const GeneratedGroup& g, const SubgroupLattice& lattice) {
  if (!g.same_group(lattice.parent())) throw MismatchError("lattice does not belong to this group");
}

}  // namespace

CosetPoset build_coset_poset(const GeneratedGroup& g, std::shared_ptr<const SubgroupLattice> lattice) {
  check_family(g, *lattice);
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = 0; s < lattice->index_of_parent(); ++s) subs.push_back(s);
  return CosetPoset::build(std::move(lattice), subs);
}

CosetPoset build_relative_poset(const GeneratedGroup& g, const GeneratedGroup& n, std::shared_ptr<const SubgroupLattice> lattice) {
  check_family(g, *lattice);
  if (!is_normal_in(n, g)) throw PreconditionError("relative coset poset: N is not normal in G");
  const ElementTable& t = lattice->table();
  std::vector<char> in_n(t.size(), 0);
  for (const auto& e : n.elements()) in_n[t.id(e)] = 1;
  const std::uint64_t order_n = n.order_u64();
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = 0; s < lattice->index_of_parent(); ++s) {
    const Subgroup& h = lattice->subgroup(s);
    std::uint64_t meet = 0;
    for (ElementId e : h.elements) meet += in_n[e];
    // |HN| = |H||N| / |H ∩ N|
    if (h.order() * order_n == t.size() * meet) subs.push_back(s);
  }
  return CosetPoset::build(std::move(lattice), subs);
}

std::vector<std::uint32_t> translation_fixed_points(const CosetPoset& poset, const GeneratedGroup& p, const GeneratedGroup& k) {
  const SubgroupLattice& lat = poset.lattice();
  const ElementTable& t = lat.table();
  if (!p.is_subgroup_of(lat.parent()) || !k.is_subgroup_of(lat.parent()))
    throw PreconditionError("translation_fixed_points: P and K must be subgroups of G");
  std::vector<ElementId> pg, kg;
  for (const auto& x : p.generators()) pg.push_back(t.id(x));
  for (const auto& x : k.generators()) kg.push_back(t.id(x));
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < poset.size(); ++v) {
    const auto [s, x] = poset.vertex(v);
    const Subgroup& h = lat.subgroup(s);
    if (!std::all_of(pg.begin(), pg.end(), [&](ElementId e) { return h.contains(e); })) continue;
    const ElementId xi = t.inv(x);
    // K^(x^-1) = x K x^-1
    if (std::all_of(kg.begin(), kg.end(), [&](ElementId e) { return h.contains(t.conj(e, xi)); })) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> action_fixed_points(const CosetPoset& poset, const std::vector<ActionTriple>& generators) {
  std::vector<char> fixed(poset.size(), 1);
  for (const auto& tr : generators) {
    auto img = poset.image_map(tr);
    for (std::uint32_t v = 0; v < poset.size(); ++v)
      if (img[v] != v) fixed[v] = 0;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < poset.size(); ++v)
    if (fixed[v]) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> action_fixed_points(const CosetPoset& poset, const ActionGroup& e) {
  return action_fixed_points(poset, e.generators());
}

bool is_antichain(const CosetPoset& poset) { return poset.order().is_antichain(); }

void dump_poset(std::ostream& os, const CosetPoset& poset) {
  const SubgroupLattice& lat = poset.lattice();
  for (const auto& v : poset.vertices())
    os << lat.subgroup(v.subgroup).order() << ':' << to_cycle_string(lat.table().element(v.rep)) << '\n';
  os << '\n';
  for (std::uint32_t u = 0; u < poset.size(); ++u) {
    const auto& up = poset.order().above(u);
    for (std::uint32_t v : up) {
      const bool cover = std::none_of(up.begin(), up.end(), [&](std::uint32_t w) { return poset.less(w, v); });
      if (cover) os << u << ' ' << v << '\n';
    }
  }
}

}  // namespace cosets
