#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cosets/errors.hpp"
#include "cosets/group.hpp"

namespace cosets {

GeneratedGroup::GeneratedGroup() : GeneratedGroup({}, 1) {}

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators, std::size_t degree)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw PreconditionError("group degree must be positive");
  chain_ = std::make_shared<const StabilizerChain>(degree, generators_);
  order_ = chain_->order();
}

GeneratedGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree) {
  return GeneratedGroup(std::move(gens), degree);
}

std::uint64_t GeneratedGroup::order_u64() const {
  if (order_ > std::numeric_limits<std::uint64_t>::max()) throw BudgetError("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool GeneratedGroup::contains(const Permutation& p) const { return chain_->contains(p); }

bool GeneratedGroup::is_subgroup_of(const GeneratedGroup& other) const {
  if (other.degree() != degree_) throw MismatchError("subgroup test: degree mismatch");
  return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return other.contains(g); });
}

bool GeneratedGroup::same_group(const GeneratedGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

bool GeneratedGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t budget) const {
  if (order_ > budget) throw BudgetError("element enumeration of a group of order " + order_.str() + " exceeds budget");
  const auto& levels = chain_->levels();
  std::vector<Permutation> out{identity()};
  // g = u_{k-1} ... u_1 u_0, built from the deepest level upwards.
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels[l].reps.size());
    for (const auto& h : out)
      for (const auto& u : levels[l].reps) next.push_back(h * u);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedGroup join(const GeneratedGroup& a, const GeneratedGroup& b) {
  if (a.degree() != b.degree()) throw MismatchError("join: degree mismatch");
  std::vector<Permutation> gens = a.generators();
  for (const auto& g : b.generators())
    if (!a.contains(g)) gens.push_back(g);
  return GeneratedGroup(std::move(gens), a.degree());
}

GeneratedGroup conjugate_group(const GeneratedGroup& k, const Permutation& g) {
  if (g.degree() != k.degree()) throw MismatchError("conjugate_group: degree mismatch");
  std::vector<Permutation> gens;
  gens.reserve(k.generators().size());
  for (const auto& x : k.generators()) gens.push_back(conjugate(x, g));
  return GeneratedGroup(std::move(gens), k.degree());
}

bool normalizes(const Permutation& g, const GeneratedGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return h.contains(conjugate(x, g)); });
}

GeneratedGroup normal_closure(const GeneratedGroup& group, const std::vector<Permutation>& gens) {
  GeneratedGroup closure(gens, group.degree());
  std::vector<Permutation> current = gens;
  for (std::size_t i = 0; i < current.size(); ++i) {
    for (const auto& s : group.generators()) {
      Permutation c = conjugate(current[i], s);
      if (closure.contains(c)) continue;
      current.push_back(c);
      closure = GeneratedGroup(current, group.degree());
    }
  }
  return closure;
}

bool is_normal_in(const GeneratedGroup& sub, const GeneratedGroup& group) {
  if (!sub.is_subgroup_of(group)) return false;
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const Permutation& g) { return normalizes(g, sub); });
}

std::vector<std::vector<Point>> orbits(const GeneratedGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    seen[start] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators()) {
        Point next = s[orbit[k]];
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

GeneratedGroup restrict_to(const GeneratedGroup& g, const std::vector<Point>& points) {
  std::vector<std::int32_t> local(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<std::int32_t>(i);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int32_t j = local[s[points[i]]];
      if (j < 0) throw PreconditionError("restrict_to: point set is not invariant");
      images[i] = static_cast<Point>(j);
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return GeneratedGroup(std::move(gens), std::max<std::size_t>(points.size(), 1));
}

GeneratedGroup even_part(const GeneratedGroup& g) {
  const Permutation* odd = nullptr;
  for (const auto& s : g.generators())
    if (sign(s) < 0) {
      odd = &s;
      break;
    }
  if (odd == nullptr) return g;
  // Schreier generators for the index-2 subgroup with transversal {1, odd}.
  const Permutation odd_inv = inverse(*odd);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    if (sign(s) > 0) {
      gens.push_back(s);
      gens.push_back(*odd * s * odd_inv);
    } else {
      gens.push_back(s * odd_inv);
      gens.push_back(*odd * s);
    }
  }
  return GeneratedGroup(std::move(gens), g.degree());
}

Permutation embed_in_block(const Permutation& x, std::size_t block, std::size_t copies) {
  if (block >= copies) throw PreconditionError("embed_in_block: block out of range");
  return shift(x, block * x.degree(), copies * x.degree());
}

Permutation diagonal_element(const Permutation& x, std::size_t copies) {
  const std::size_t d = x.degree();
  std::vector<Point> images(d * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t i = 0; i < d; ++i) images[b * d + i] = static_cast<Point>(b * d + x[i]);
  return Permutation::from_images(std::move(images));
}

GeneratedGroup direct_power(const GeneratedGroup& l, std::size_t copies) {
  if (copies == 0) throw PreconditionError("direct_power: need at least one copy");
  if (copies == 1) return l;
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < copies; ++b)
    for (const auto& s : l.generators()) gens.push_back(embed_in_block(s, b, copies));
  return GeneratedGroup(std::move(gens), l.degree() * copies);
}

GeneratedGroup block_factor(const GeneratedGroup& l, std::size_t block, std::size_t copies) {
  std::vector<Permutation> gens;
  for (const auto& s : l.generators()) gens.push_back(embed_in_block(s, block, copies));
  return GeneratedGroup(std::move(gens), l.degree() * copies);
}

GeneratedGroup diagonal_embedding(const GeneratedGroup& k, std::size_t copies) {
  if (copies == 0) throw PreconditionError("diagonal_embedding: need at least one copy");
  if (copies == 1) return k;
  std::vector<Permutation> gens;
  for (const auto& s : k.generators()) gens.push_back(diagonal_element(s, copies));
  return GeneratedGroup(std::move(gens), k.degree() * copies);
}

Permutation QuotientRepresentation::map(const Permutation& g, const GeneratedGroup& n) const {
  std::vector<Point> images(transversal.size());
  for (std::size_t i = 0; i < transversal.size(); ++i) {
    Permutation y = transversal[i] * g;
    std::size_t j = 0;
    while (j < transversal.size() && !n.contains(y * inverse(transversal[j]))) ++j;
    if (j == transversal.size()) throw PreconditionError("quotient map: element outside the group");
    images[i] = static_cast<Point>(j);
  }
  return Permutation::from_images(std::move(images));
}

QuotientRepresentation quotient_representation(const GeneratedGroup& g, const GeneratedGroup& n) {
  if (n.degree() != g.degree()) throw MismatchError("quotient: degree mismatch");
  if (!n.is_subgroup_of(g)) throw PreconditionError("quotient: N is not a subgroup of G");
  if (!is_normal_in(n, g)) throw PreconditionError("quotient: N is not normal in G");
  QuotientRepresentation q{GeneratedGroup(), {}, {g.identity()}};
  // Orbit of the coset N under right multiplication; cosets Nx = Ny iff x y^-1 in N.
  auto locate = [&](const Permutation& y) -> std::int64_t {
    for (std::size_t j = 0; j < q.transversal.size(); ++j)
      if (n.contains(y * inverse(q.transversal[j]))) return static_cast<std::int64_t>(j);
    return -1;
  };
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < q.transversal.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation y = q.transversal[i] * g.generators()[s];
      std::int64_t j = locate(y);
      if (j < 0) {
        j = static_cast<std::int64_t>(q.transversal.size());
        q.transversal.push_back(y);
      }
      images[s].push_back(static_cast<Point>(j));
    }
  }
  for (auto& im : images) q.generator_images.push_back(Permutation::from_images(std::move(im)));
  q.group = GeneratedGroup(q.generator_images, q.transversal.size());
  return q;
}

std::vector<GeneratedGroup> minimal_normal_subgroups(const GeneratedGroup& g) {
  if (g.is_trivial()) throw PreconditionError("minimal_normal_subgroups: trivial group");
  const auto elems = g.elements();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  // Every minimal normal subgroup is the normal closure of any of its
  // nontrivial elements, so it suffices to scan one element per class.
  std::vector<char> classified(elems.size(), 0);
  std::vector<GeneratedGroup> candidates;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (classified[i]) continue;
    std::vector<std::size_t> cls{i};
    classified[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto& s : g.generators()) {
        std::size_t j = index.at(conjugate(elems[cls[k]], s));
        if (!classified[j]) {
          classified[j] = 1;
          cls.push_back(j);
        }
      }
    GeneratedGroup ncl = normal_closure(g, {elems[i]});
    bool seen = std::any_of(candidates.begin(), candidates.end(), [&](const GeneratedGroup& c) { return c.same_group(ncl); });
    if (!seen) candidates.push_back(std::move(ncl));
  }
  std::vector<GeneratedGroup> minimal;
  for (const auto& c : candidates) {
    bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const GeneratedGroup& d) {
      return d.order() < c.order() && d.is_subgroup_of(c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](const GeneratedGroup& a, const GeneratedGroup& b) { return a.order() < b.order(); });
  return minimal;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt part = 1, rest = n;
  while (rest != 0 && rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return part;
}

}  // namespace cosets
