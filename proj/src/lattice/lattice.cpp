#include <algorithm>
#include <ostream>
#include <set>

#include "cosets/errors.hpp"
#include "cosets/lattice.hpp"

namespace cosets {

namespace {

std::uint64_t hash_bits(const std::vector<std::uint64_t>& bits) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : bits) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return h;
}

// Working set of subgroups with bitset deduplication.
class SubgroupPool {
 public:
  explicit SubgroupPool(const ElementTable& t) : t_(t), words_((t.size() + 63) / 64) {}

  Subgroup make(std::vector<ElementId> elements, std::vector<ElementId> generators) const {
    Subgroup s;
    s.bits.assign(words_, 0);
    for (ElementId e : elements) s.bits[e >> 6] |= std::uint64_t{1} << (e & 63);
    std::sort(elements.begin(), elements.end());
    s.elements = std::move(elements);
    s.generators = std::move(generators);
    return s;
  }

  Subgroup cyclic(ElementId g) const {
    std::vector<ElementId> elems{0};
    for (ElementId x = g; x != 0; x = t_.mul(x, g)) elems.push_back(x);
    return make(std::move(elems), g == 0 ? std::vector<ElementId>{} : std::vector<ElementId>{g});
  }

  // <H, g> as a union of right cosets of H: R is closed once y*s lies in R
  // for every coset representative y and generator s.
  Subgroup join(const Subgroup& h, ElementId g) const {
    std::vector<ElementId> gens = h.generators;
    gens.push_back(g);
    std::vector<std::uint64_t> bits = h.bits;
    std::vector<ElementId> elems = h.elements;
    std::vector<ElementId> reps{0};
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (ElementId s : gens) {
        const ElementId z = t_.mul(reps[i], s);
        if ((bits[z >> 6] >> (z & 63)) & 1u) continue;
        for (ElementId x : h.elements) {
          const ElementId y = t_.mul(x, z);
          bits[y >> 6] |= std::uint64_t{1} << (y & 63);
          elems.push_back(y);
        }
        reps.push_back(z);
      }
    Subgroup s;
    std::sort(elems.begin(), elems.end());
    s.elements = std::move(elems);
    s.bits = std::move(bits);
    s.generators = std::move(gens);
    return s;
  }

  // Returns true if new.
  bool insert(Subgroup s) {
    const std::uint64_t h = hash_bits(s.bits);
    auto range = seen_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (list_[it->second].bits == s.bits) return false;
    seen_.emplace(h, list_.size());
    list_.push_back(std::move(s));
    return true;
  }

  std::vector<Subgroup>& list() { return list_; }

 private:
  const ElementTable& t_;
  std::size_t words_;
  std::vector<Subgroup> list_;
  std::unordered_multimap<std::uint64_t, std::size_t> seen_;
};

}  // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<const ElementTable> table, std::vector<Subgroup> subgroups, bool complete)
    : table_(std::move(table)), subgroups_(std::move(subgroups)), complete_(complete) {
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  const std::size_t n = subgroups_.size();
  above_.assign(n, {});
  below_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    by_hash_.emplace(hash_bits(subgroups_[i].bits), i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Subgroup& a = subgroups_[i];
      const Subgroup& b = subgroups_[j];
      if (a.order() == b.order() || b.order() % a.order() != 0) continue;
      bool inside = std::all_of(a.generators.begin(), a.generators.end(), [&](ElementId e) { return b.contains(e); });
      if (inside) {
        above_[i].push_back(static_cast<std::uint32_t>(j));
        below_[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
}

SubgroupLattice SubgroupLattice::enumerate(const GeneratedGroup& g, std::uint64_t max_order) {
  if (g.order() > max_order)
    throw BudgetError("subgroup enumeration: |G| = " + g.order().str() + " exceeds the bound " + std::to_string(max_order));
  auto table = std::make_shared<const ElementTable>(g);
  SubgroupPool pool(*table);
  std::vector<ElementId> conjugators;
  for (const auto& s : g.generators()) conjugators.push_back(table->id(s));

  // Adds the conjugacy class of s; returns false if s was already known.
  auto add_class = [&](Subgroup s) {
    if (!pool.insert(std::move(s))) return false;
    for (std::size_t i = pool.list().size() - 1; i < pool.list().size(); ++i)
      for (ElementId c : conjugators) {
        std::vector<ElementId> image, gens;
        for (ElementId e : pool.list()[i].elements) image.push_back(table->conj(e, c));
        for (ElementId e : pool.list()[i].generators) gens.push_back(table->conj(e, c));
        pool.insert(pool.make(std::move(image), std::move(gens)));
      }
    return true;
  };

  std::vector<ElementId> cyclic_gens;
  std::vector<std::size_t> reps;
  std::set<std::vector<ElementId>> seen_cyclic;
  for (ElementId e = 0; e < table->size(); ++e) {
    Subgroup c = pool.cyclic(e);
    if (!seen_cyclic.insert(c.elements).second) continue;
    if (e != 0) cyclic_gens.push_back(e);
    const std::size_t before = pool.list().size();
    if (add_class(std::move(c))) reps.push_back(before);
  }
  // Every subgroup K is <M, c> with M maximal in K and c cyclic; conjugating
  // moves M onto a class representative, so joining representatives with
  // all cyclic subgroups and closing under conjugation reaches every K.
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (ElementId c : cyclic_gens) {
      if (pool.list()[reps[r]].contains(c)) continue;
      const std::size_t before = pool.list().size();
      if (add_class(pool.join(pool.list()[reps[r]], c))) reps.push_back(before);
    }
  return SubgroupLattice(table, std::move(pool.list()), true);
}

SubgroupLattice SubgroupLattice::overgroups(const GeneratedGroup& g, const GeneratedGroup& p, std::uint64_t max_order) {
  if (!p.is_subgroup_of(g)) throw PreconditionError("overgroups: P is not a subgroup of G");
  auto table = std::make_shared<const ElementTable>(g, max_order);
  SubgroupPool pool(*table);
  Subgroup start = pool.cyclic(0);
  for (const auto& s : p.generators()) {
    ElementId e = table->id(s);
    if (!start.contains(e)) start = pool.join(start, e);
  }
  pool.insert(std::move(start));
  std::vector<char> done;
  for (std::size_t i = 0; i < pool.list().size(); ++i) {
    done.assign(table->size(), 0);
    for (ElementId e = 0; e < table->size(); ++e) {
      if (done[e] || pool.list()[i].contains(e)) continue;
      // <H, h e> = <H, e>: skip the rest of the right coset H e.
      for (ElementId h : pool.list()[i].elements) done[table->mul(h, e)] = 1;
      Subgroup joined = pool.join(pool.list()[i], e);
      pool.insert(std::move(joined));
    }
  }
  const bool everything = p.is_trivial();
  return SubgroupLattice(table, std::move(pool.list()), everything);
}

std::optional<std::size_t> SubgroupLattice::index_of_trivial() const {
  if (!subgroups_.empty() && subgroups_.front().order() == 1) return 0;
  return std::nullopt;
}

bool SubgroupLattice::includes(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  return std::binary_search(above_[i].begin(), above_[i].end(), static_cast<std::uint32_t>(j));
}

std::optional<std::size_t> SubgroupLattice::find(const std::vector<ElementId>& sorted_elements) const {
  std::vector<std::uint64_t> bits((table_->size() + 63) / 64, 0);
  for (ElementId e : sorted_elements) bits[e >> 6] |= std::uint64_t{1} << (e & 63);
  auto range = by_hash_.equal_range(hash_bits(bits));
  for (auto it = range.first; it != range.second; ++it)
    if (subgroups_[it->second].bits == bits) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> SubgroupLattice::conjugate_index(std::size_t i, ElementId g) const {
  std::vector<ElementId> image;
  image.reserve(subgroups_[i].order());
  for (ElementId e : subgroups_[i].elements) image.push_back(table_->conj(e, g));
  std::sort(image.begin(), image.end());
  return find(image);
}

GeneratedGroup SubgroupLattice::as_group(std::size_t i) const {
  std::vector<Permutation> gens;
  for (ElementId e : subgroups_[i].generators) gens.push_back(table_->element(e));
  return GeneratedGroup(std::move(gens), table_->degree());
}

std::optional<std::size_t> SubgroupLattice::locate(const GeneratedGroup& h) const {
  if (h.order() > table_->size()) return std::nullopt;
  std::vector<ElementId> elems;
  for (const auto& x : h.elements()) {
    auto id = table_->find(x);
    if (!id) return std::nullopt;
    elems.push_back(*id);
  }
  std::sort(elems.begin(), elems.end());
  return find(elems);
}

bool SubgroupLattice::product_is_parent(std::size_t i, std::size_t n) const {
  const Subgroup& h = subgroups_[i];
  const Subgroup& nn = subgroups_[n];
  std::size_t meet = 0;
  for (ElementId e : h.elements) meet += nn.contains(e);
  // |HN| = |H||N|/|H ∩ N|
  return h.order() * nn.order() == table_->size() * meet;
}

MoebiusTable moebius_to_top(const SubgroupLattice& lattice) {
  MoebiusTable m;
  const std::size_t n = lattice.size();
  m.mu_to_top.assign(n, 0);
  m.mu_to_top[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    long long sum = 0;
    for (std::uint32_t k : lattice.strictly_above(i))
      if (__builtin_add_overflow(sum, m.mu_to_top[k], &sum)) throw Error("Möbius function overflow");
    m.mu_to_top[i] = -sum;
  }
  return m;
}

std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lattice) {
  std::vector<std::size_t> out;
  const std::size_t top = lattice.index_of_parent();
  for (std::size_t i = 0; i < top; ++i) {
    const auto& up = lattice.strictly_above(i);
    if (up.size() == 1 && up[0] == top) out.push_back(i);
  }
  return out;
}

void dump_lattice(std::ostream& os, const SubgroupLattice& lattice, const MoebiusTable& mu) {
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& s = lattice.subgroup(i);
    os << s.order() << ';';
    for (std::size_t k = 0; k < s.elements.size(); ++k) os << (k ? " " : "") << s.elements[k];
    os << ';' << mu.mu_to_top[i] << '\n';
  }
}

}  // namespace cosets
