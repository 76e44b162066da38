#include <algorithm>

#include "cosets/errors.hpp"
#include "cosets/group.hpp"

namespace cosets {

namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_p_element(const Permutation& g, std::uint64_t p) {
  std::uint64_t o = element_order(g);
  while (o % p == 0) o /= p;
  return o == 1;
}

// Grow a p-subgroup by p-elements of its normalizer until it reaches the
// full p-part of |G|.  If P is a non-Sylow p-subgroup then N(P)/P has
// order divisible by p, and any lift of an element of order p is itself a
// p-element outside P, so the scan always succeeds.
GeneratedGroup sylow_by_enumeration(const GeneratedGroup& g, std::uint64_t p, const BigInt& target) {
  const auto elems = g.elements();
  GeneratedGroup sub = GeneratedGroup::trivial(g.degree());
  while (sub.order() < target) {
    bool grown = false;
    for (const auto& x : elems) {
      if (!is_p_element(x, p) || sub.contains(x) || !normalizes(x, sub)) continue;
      std::vector<Permutation> gens = sub.generators();
      gens.push_back(x);
      sub = GeneratedGroup(std::move(gens), g.degree());
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow: no p-element in the normalizer; group data inconsistent");
  }
  return sub;
}

std::vector<Point> moved_points(const GeneratedGroup& g) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (std::any_of(g.generators().begin(), g.generators().end(), [&](const Permutation& s) { return s[i] != i; }))
      out.push_back(static_cast<Point>(i));
  return out;
}

}  // namespace

GeneratedGroup symmetric_sylow(std::size_t degree, const std::vector<Point>& points, std::uint64_t p) {
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  std::size_t m = points.size();
  // Base-p digits of m, largest blocks first.
  std::vector<std::size_t> powers{1};
  while (powers.back() * p <= m) powers.push_back(powers.back() * p);
  for (std::size_t k = powers.size(); k-- > 1;) {
    const std::size_t block = powers[k];
    while (m >= block) {
      // Sylow subgroup of Sym(block) = C_p wr ... wr C_p: level j shifts the
      // first p^j points by p^(j-1), cyclically.
      for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t span = powers[j], step = powers[j - 1];
        std::vector<Point> images(degree);
        for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
        for (std::size_t x = 0; x < span; ++x) images[points[offset + x]] = points[offset + (x + step) % span];
        gens.push_back(Permutation::from_images(std::move(images)));
      }
      offset += block;
      m -= block;
    }
  }
  return GeneratedGroup(std::move(gens), degree);
}

GeneratedGroup sylow(const GeneratedGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("sylow: p must be prime");
  const BigInt target = p_part(g.order(), p);
  if (target == 1) return GeneratedGroup::trivial(g.degree());

  // Direct product of orbit restrictions: combine the factors' Sylow subgroups.
  const auto orbs = orbits(g);
  std::vector<std::vector<Point>> nontrivial;
  for (const auto& o : orbs)
    if (o.size() > 1) nontrivial.push_back(o);
  if (nontrivial.size() > 1) {
    BigInt product = 1;
    std::vector<GeneratedGroup> parts;
    for (const auto& o : nontrivial) {
      parts.push_back(restrict_to(g, o));
      product *= parts.back().order();
    }
    if (product == g.order()) {
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        GeneratedGroup local = sylow(parts[i], p);
        for (const auto& s : local.generators()) {
          std::vector<Point> images(g.degree());
          for (std::size_t x = 0; x < g.degree(); ++x) images[x] = static_cast<Point>(x);
          for (std::size_t x = 0; x < nontrivial[i].size(); ++x) images[nontrivial[i][x]] = nontrivial[i][s[x]];
          gens.push_back(Permutation::from_images(std::move(images)));
        }
      }
      return GeneratedGroup(std::move(gens), g.degree());
    }
  }

  if (g.order() <= kEnumerationBound) return sylow_by_enumeration(g, p, target);

  const auto support = moved_points(g);
  const BigInt full = factorial(support.size());
  if (g.order() == full) return symmetric_sylow(g.degree(), support, p);
  if (2 * g.order() == full) {
    GeneratedGroup s = symmetric_sylow(g.degree(), support, p);
    return p == 2 ? even_part(s) : s;
  }
  throw BudgetError("sylow: group of order " + g.order().str() + " is beyond the enumeration bound");
}

}  // namespace cosets
