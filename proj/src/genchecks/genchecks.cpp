#include "cosets/genchecks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "cosets/errors.hpp"
#include "cosets/standard_groups.hpp"

namespace cosets {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Permutation> element_key(const GeneratedGroup& h) { return h.elements(); }

}  // namespace

GenerationReport universally_p_generates(const GeneratedGroup& g, const GeneratedGroup& k, std::uint64_t p, std::uint64_t budget) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!k.is_subgroup_of(g)) throw PreconditionError("universally_p_generates: K is not a subgroup of G");
  if (!is_prime(p) || p_part(g.order(), p) == 1) throw PreconditionError("universally_p_generates: p does not divide |G|");
  GenerationReport report;
  report.subject = "K of order " + k.order().str() + " in G of order " + g.order().str() + ", p = " + std::to_string(p);

  const GeneratedGroup base = sylow(g, p);
  std::set<std::vector<Permutation>> seen{element_key(base)};
  std::vector<std::pair<GeneratedGroup, Permutation>> queue{{base, Permutation(g.degree())}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const GeneratedGroup q = queue[i].first;
    const Permutation conj = queue[i].second;
    ++report.tests;
    const GeneratedGroup joined = join(k, q);
    if (joined.order() != g.order()) {
      report.verdict = false;
      report.witnesses.push_back({conj, joined.order(), "Sylow conjugate P^g with <K, P^g> proper"});
      break;
    }
    for (const auto& s : g.generators()) {
      GeneratedGroup next = conjugate_group(q, s);
      if (!seen.insert(element_key(next)).second) continue;
      if (seen.size() > budget) throw BudgetError("Sylow orbit exceeds " + std::to_string(budget) + " conjugates");
      Permutation c = conj * s;
      queue.emplace_back(std::move(next), std::move(c));
    }
  }
  report.millis = since(t0);
  return report;
}

bool univ_gen_via_maximal_indices(const GeneratedGroup& g, std::uint64_t r, std::uint64_t p, const SubgroupLattice& lattice) {
  if (!g.same_group(lattice.parent())) throw MismatchError("lattice does not belong to this group");
  const std::uint64_t order = lattice.table().size();
  if (!lattice.complete()) {
    // Overgroups of a Sylow p-subgroup P.  A maximal subgroup of index prime
    // to p contains a conjugate of P, so conjugating it onto P finds it here.
    std::uint64_t sylow_order = 1;
    for (std::uint64_t m = order; m % p == 0; m /= p) sylow_order *= p;
    if (lattice.size() == 0 || lattice.subgroup(0).order() != sylow_order)
      throw PreconditionError("maximal subgroup census needs the complete lattice or the overgroups of a Sylow " +
                              std::to_string(p) + "-subgroup");
  }
  for (auto m : maximal_subgroups(lattice)) {
    const std::uint64_t index = order / lattice.subgroup(m).order();
    if (index % p != 0 && index % r != 0) return false;
  }
  return true;
}

std::uint64_t alternating_claim_test_count(unsigned n) {
  // n-cycles on n points: (n-1)!;  (n-1)-cycles: n (n-2)!.
  std::uint64_t f = 1;
  for (unsigned i = 2; i + 2 <= n; ++i) f *= i;  // (n-2)!
  return n % 2 ? f * (n - 1) : f * n;
}

namespace {

// The idx-th m-cycle on `points` (first point fixed as the cycle start).
Permutation cycle_from_index(std::size_t degree, const std::vector<Point>& points, std::uint64_t idx) {
  std::vector<Point> rest(points.begin() + 1, points.end());
  std::vector<Point> order{points.front()};
  // Lehmer code of idx over rest.
  std::vector<std::uint64_t> fact(rest.size() + 1, 1);
  for (std::size_t i = 1; i <= rest.size(); ++i) fact[i] = fact[i - 1] * i;
  for (std::size_t i = rest.size(); i > 0; --i) {
    const std::uint64_t q = idx / fact[i - 1];
    idx %= fact[i - 1];
    order.push_back(rest[q]);
    rest.erase(rest.begin() + static_cast<long>(q));
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < order.size(); ++i) images[order[i]] = order[(i + 1) % order.size()];
  return Permutation::from_images(std::move(images));
}

}  // namespace

GenerationReport check_alternating_claims(unsigned n, unsigned workers) {
  if (n < 5) throw PreconditionError("check_alternating_claims needs n >= 5");
  const auto t0 = std::chrono::steady_clock::now();
  const GeneratedGroup an = alternating_group(n);
  const GeneratedGroup p = sylow(an, 2);
  const unsigned m = n % 2 ? n : n - 1;
  GenerationReport report;
  report.subject = "A_" + std::to_string(n) + ": <c, P> over all " + std::to_string(m) + "-cycles c";

  // Cycles indexed by (fixed point, Lehmer index); for odd n the fixed point slot is unused.
  const std::uint64_t per_support = alternating_claim_test_count(n) / (n % 2 ? 1 : n);
  const std::uint64_t total = alternating_claim_test_count(n);
  auto cycle_at = [&](std::uint64_t i) {
    std::vector<Point> support;
    const auto skip = n % 2 ? n : static_cast<unsigned>(i / per_support);
    for (Point x = 0; x < n; ++x)
      if (x != skip) support.push_back(x);
    return cycle_from_index(n, support, i % per_support);
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  struct Failure {
    std::uint64_t index;
    Permutation cycle;
    GeneratedGroup group;
  };
  std::vector<std::vector<Failure>> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      std::vector<Permutation> gens = p.generators();
      gens.push_back(Permutation(n));
      for (std::uint64_t i = total * w / workers; i < total * (w + 1) / workers; ++i) {
        gens.back() = cycle_at(i);
        GeneratedGroup h(gens, n);
        if (h.order() != an.order()) failures[w].push_back({i, gens.back(), std::move(h)});
      }
    });
  for (auto& th : pool) th.join();

  report.tests = total;
  std::vector<Failure> all;
  for (auto& f : failures)
    for (auto& x : f) all.push_back(std::move(x));
  report.verdict = all.empty();
  std::vector<GeneratedGroup> distinct;
  for (const auto& f : all) {
    if (std::any_of(distinct.begin(), distinct.end(), [&](const GeneratedGroup& d) { return d.same_group(f.group); })) continue;
    distinct.push_back(f.group);
    report.witnesses.push_back({f.cycle, f.group.order(), "first cycle generating this proper overgroup of P"});
  }
  if (!all.empty())
    report.subject += "; " + std::to_string(all.size()) + " cycles fail";
  report.millis = since(t0);
  return report;
}

GenerationReport check_diagonal_universal(const GeneratedGroup& l, const GeneratedGroup& k, std::uint64_t p, std::size_t t) {
  if (t == 0) throw PreconditionError("check_diagonal_universal needs t >= 1");
  if (!k.is_subgroup_of(l)) throw PreconditionError("check_diagonal_universal: K is not a subgroup of L");
  auto report = universally_p_generates(direct_power(l, t), diagonal_embedding(k, t), p);
  report.subject = "K^diag in L^" + std::to_string(t) + ", |L| = " + l.order().str() + ", p = " + std::to_string(p);
  return report;
}

FixedPointFreeResult sylow2_fixed_point_free_element(unsigned n) {
  FixedPointFreeResult out;
  if (n % 2) {
    out.reason = "odd degree: every orbit of a 2-group has 2-power size, so some orbit is a fixed point";
    return out;
  }
  if (n < 4) {
    out.reason = "A_" + std::to_string(n) + " has no nontrivial 2-elements without fixed points";
    return out;
  }
  const GeneratedGroup p = sylow(alternating_group(n), 2);
  for (const auto& x : p.elements())
    if (fixed_point_count(x) == 0) {
      out.witness = x;
      return out;
    }
  out.reason = "no element of the Sylow 2-subgroup is fixed-point-free";
  return out;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ParityIdentity imprimitive_parity_identity(unsigned n, unsigned d) {
  if (d <= 1 || d >= n || n % d != 0)
    throw PreconditionError("imprimitive_parity_identity: d = " + std::to_string(d) + " is not a proper nontrivial divisor of " +
                            std::to_string(n));
  const unsigned l = n / d;
  const BigInt lhs = factorial(n) / (boost::multiprecision::pow(factorial(d), l) * factorial(l));
  BigInt rhs = 1;
  for (unsigned j = 1; j <= l; ++j) rhs *= binomial(j * d - 1, d - 1);
  if (lhs != rhs) throw Error("factorial quotient and binomial product differ for n = " + std::to_string(n));
  ParityIdentity out;
  out.value = lhs;
  out.even = (lhs & 1) == 0;
  if (l >= 2) out.factor_identity = binomial(2 * d - 1, d - 1) * d == BigInt(2 * d - 1) * 2 * binomial(2 * d - 3, d - 1);
  return out;
}

}  // namespace cosets
