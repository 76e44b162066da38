#include "cosets/complex.hpp"
#include "cosets/coset_poset.hpp"
#include "cosets/errors.hpp"
#include "cosets/hallzeta.hpp"
#include "cosets/standard_groups.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cosets;

namespace {

DirichletPolynomial hall(const GeneratedGroup& g) {
  auto lat = SubgroupLattice::enumerate(g);
  return hall_polynomial(g, lat, moebius_to_top(lat));
}

DirichletPolynomial poly(std::initializer_list<std::pair<const std::uint64_t, long long>> c) { return {c}; }

// Generating pairs counted with the plain closure oracle, no BSGS, no cosets.
std::size_t generating_pairs(const GeneratedGroup& g) {
  auto all = oracle::closure(g.generators(), g.degree());
  std::size_t n = 0;
  for (const auto& a : all)
    for (const auto& b : all) n += oracle::closure({a, b}, g.degree()).size() == all.size();
  return n;
}

}  // namespace

TEST_CASE("hall_polynomial") {
  CHECK(hall(cyclic_group(5)) == poly({{1, 1}, {5, -1}}));
  CHECK(hall(symmetric_group(3)) == poly({{1, 1}, {2, -1}, {3, -3}, {6, 3}}));
  CHECK(hall(group_from_text("(1,2),(3,4)", 4)) == poly({{1, 1}, {2, -3}, {4, 2}}));
  CHECK(hall(symmetric_group(3)).to_string() == "1:1 2:-1 3:-3 6:3");

  auto a7 = alternating_group(7);
  auto up = SubgroupLattice::overgroups(a7, sylow(a7, 2));
  CHECK_THROWS_AS(hall_polynomial(a7, up, moebius_to_top(up)), PreconditionError);
  auto s3 = SubgroupLattice::enumerate(symmetric_group(3));
  CHECK_THROWS_AS(hall_polynomial(cyclic_group(6), s3, moebius_to_top(s3)), MismatchError);
}

TEST_CASE("evaluate") {
  auto s3 = hall(symmetric_group(3));
  CHECK(evaluate(s3, 1) == 0);
  CHECK(evaluate(s3, -1) == 8);
  CHECK(evaluate(s3, 2) == ExactRational(1, 2));
  CHECK(evaluate(hall(cyclic_group(2)), 1) == ExactRational(1, 2));
  for (const char* gens : {"(1,2,3,4),(1,3)", "(1,2,3),(2,3,4)", "(1,2,3,4,5,6)"}) {
    auto p = hall(group_from_text(gens, 6));
    CHECK(p.coefficient(1) == 1);
    CHECK(evaluate(p, 0) == 0);
  }
}

TEST_CASE("brute force generation probability") {
  CHECK(brute_force_generation_probability(cyclic_group(2), 1) == ExactRational(1, 2));
  CHECK(brute_force_generation_probability(symmetric_group(3), 2) == ExactRational(1, 2));
  CHECK(brute_force_generation_probability(cyclic_group(6), 1) == ExactRational(1, 3));
  CHECK_THROWS_AS(brute_force_generation_probability(alternating_group(7), 3), BudgetError);

  for (const char* gens : {"(1,2,3,4),(1,3)", "(1,2,3),(2,3,4)", "(1,2)(3,4),(1,3)(2,4),(5,6)", "(1,2,3),(1,2),(4,5)"}) {
    auto g = group_from_text(gens, 6);
    auto bf = brute_force_generation_probability(g, 2);
    const auto n = g.order_u64();
    CHECK(bf == ExactRational(static_cast<long long>(generating_pairs(g)), static_cast<long long>(n * n)));
    CHECK(bf == evaluate(hall(g), 2));
    CHECK(brute_force_generation_probability(g, 1) == evaluate(hall(g), 1));
    // Worker partition does not change the count.
    CHECK(brute_force_generation_probability(g, 2, kTupleBudget, 3) == bf);
  }
  auto v4 = group_from_text("(1,2),(3,4)", 4);
  CHECK(brute_force_generation_probability(v4, 3) == evaluate(hall(v4), 3));
}

TEST_CASE("poset_moebius_hat") {
  CHECK(poset_moebius_hat(FinitePoset::antichain(0)) == -1);
  CHECK(poset_moebius_hat(FinitePoset::antichain(3)) == 2);
  auto s3 = symmetric_group(3);
  auto lat = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(s3));
  auto cp = build_coset_poset(s3, lat);
  CHECK(poset_moebius_hat(cp.order()) == -8);
  CHECK(reduced_euler_characteristic(order_complex(cp.order())) == -8);
  // Hall's identity on a few posets.
  auto chain = FinitePoset::from_relations(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(poset_moebius_hat(chain) == reduced_euler_characteristic(order_complex(chain)));
}
