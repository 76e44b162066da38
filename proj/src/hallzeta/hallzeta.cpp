#include "cosets/hallzeta.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "cosets/errors.hpp"

namespace cosets {

long long DirichletPolynomial::coefficient(std::uint64_t n) const {
  auto it = coefficients.find(n);
  return it == coefficients.end() ? 0 : it->second;
}

std::string DirichletPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [n, a] : coefficients) {
    os << (first ? "" : " ") << n << ':' << a;
    first = false;
  }
  return os.str();
}

DirichletPolynomial hall_polynomial(const GeneratedGroup& g, const SubgroupLattice& lattice, const MoebiusTable& mu) {
  if (!lattice.complete()) throw PreconditionError("hall_polynomial needs the complete subgroup lattice");
  if (!g.same_group(lattice.parent())) throw MismatchError("lattice does not belong to this group");
  if (mu.mu_to_top.size() != lattice.size()) throw MismatchError("Moebius table does not match the lattice");
  DirichletPolynomial p;
  const std::uint64_t order = lattice.table().size();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (mu.mu_to_top[i] == 0) continue;
    long long& a = p.coefficients[order / lattice.subgroup(i).order()];
    if (__builtin_add_overflow(a, mu.mu_to_top[i], &a)) throw Error("Hall polynomial coefficient overflow");
  }
  std::erase_if(p.coefficients, [](const auto& kv) { return kv.second == 0; });
  return p;
}

ExactRational evaluate(const DirichletPolynomial& poly, int k) {
  ExactRational sum = 0;
  for (auto [n, a] : poly.coefficients) {
    const BigInt power = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k < 0 ? -k : k));
    sum += k < 0 ? ExactRational(BigInt(a) * power) : ExactRational(BigInt(a), power);
  }
  return sum;
}

namespace {

// Generating tuples whose first coordinate is in [lo, hi).
BigInt count_generating(const ElementTable& t, unsigned k, ElementId lo, ElementId hi) {
  const std::uint64_t n = t.size();
  const std::uint64_t order = t.group().order_u64();
  BigInt total = 0;
  std::vector<ElementId> prefix(k - 1, 0);
  std::vector<Permutation> gens;
  std::vector<char> seen(n);
  // Mixed-radix counter over the first k-1 coordinates, first digit limited to [lo, hi).
  if (k == 1) {
    for (ElementId b = lo; b < hi; ++b)
      if (GeneratedGroup({t.element(b)}, t.degree()).order_u64() == order) ++total;
    return total;
  }
  prefix[0] = lo;
  while (prefix[0] < hi) {
    gens.clear();
    for (ElementId e : prefix) gens.push_back(t.element(e));
    const GeneratedGroup h(gens, t.degree());
    std::vector<ElementId> hs;
    for (const auto& x : h.elements()) hs.push_back(t.id(x));
    std::uint64_t generating = 0;
    if (hs.size() == n) {
      generating = n;
    } else {
      std::fill(seen.begin(), seen.end(), 0);
      gens.push_back(Permutation(t.degree()));
      for (ElementId b = 0; b < n; ++b) {
        if (seen[b]) continue;
        for (ElementId x : hs) seen[t.mul(x, b)] = 1;
        gens.back() = t.element(b);
        if (GeneratedGroup(gens, t.degree()).order_u64() == order) generating += hs.size();
      }
    }
    total += generating;
    std::size_t d = k - 2;
    while (true) {
      if (++prefix[d] < (d == 0 ? hi : n) || d == 0) break;
      prefix[d] = 0;
      --d;
    }
  }
  return total;
}

}  // namespace

ExactRational brute_force_generation_probability(const GeneratedGroup& g, unsigned k, std::uint64_t budget, unsigned workers) {
  if (k == 0) throw PreconditionError("brute_force_generation_probability: k must be positive");
  const BigInt tuples = boost::multiprecision::pow(BigInt(g.order()), k);
  if (tuples > budget)
    throw BudgetError("|G|^k = " + tuples.str() + " exceeds the tuple budget " + std::to_string(budget));
  const ElementTable t(g);
  const auto n = static_cast<ElementId>(t.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, n);
  std::vector<BigInt> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const auto lo = static_cast<ElementId>(std::uint64_t{n} * w / workers);
    const auto hi = static_cast<ElementId>(std::uint64_t{n} * (w + 1) / workers);
    pool.emplace_back([&, w, lo, hi] { partial[w] = count_generating(t, k, lo, hi); });
  }
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return ExactRational(total, tuples);
}

long long poset_moebius_hat(const FinitePoset& poset) {
  // mu(0^, x) = -(1 + sum_{y < x} mu(0^, y)); then the same for 1^.
  std::vector<long long> acc(poset.size(), 0);
  long long top = 1;
  for (std::uint32_t x : poset.linear_extension()) {
    long long mx;
    if (__builtin_add_overflow(acc[x], 1LL, &mx)) throw Error("poset Moebius overflow");
    mx = -mx;
    for (std::uint32_t y : poset.above(x))
      if (__builtin_add_overflow(acc[y], mx, &acc[y])) throw Error("poset Moebius overflow");
    if (__builtin_add_overflow(top, mx, &top)) throw Error("poset Moebius overflow");
  }
  return -top;
}

}  // namespace cosets
