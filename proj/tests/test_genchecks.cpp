#include "cosets/errors.hpp"
#include "cosets/genchecks.hpp"
#include "cosets/standard_groups.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cosets;

namespace {

GeneratedGroup G(const char* gens, std::size_t n) { return group_from_text(gens, n); }

// Brute force: every subgroup of order |P| that is a p-group is a Sylow
// subgroup; test <K, Q> = G for all of them via the full lattice.
bool universal_by_lattice(const GeneratedGroup& g, const GeneratedGroup& k, std::uint64_t p) {
  auto lat = SubgroupLattice::enumerate(g);
  const auto sylow_order = static_cast<std::size_t>(p_part(g.order(), p));
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.subgroup(i).order() == sylow_order && join(k, lat.as_group(i)).order() != g.order()) return false;
  return true;
}

}  // namespace

TEST_CASE("universally_p_generates") {
  auto a5 = alternating_group(5);
  auto c5 = G("(1,2,3,4,5)", 5);
  auto r = universally_p_generates(a5, c5, 2);
  CHECK(r.verdict);
  CHECK(r.tests == 5);

  auto a7 = alternating_group(7);
  auto r7 = universally_p_generates(a7, G("(1,2,3,4,5,6,7)", 7), 2);
  CHECK_FALSE(r7.verdict);
  REQUIRE(r7.witnesses.size() == 1);
  CHECK(r7.witnesses[0].generated_order == 168);

  auto z6 = cyclic_group(6);
  CHECK(universally_p_generates(z6, G("(1,3,5)(2,4,6)", 6), 2).verdict);

  CHECK_THROWS_AS(universally_p_generates(a5, G("(1,2)", 5), 2), PreconditionError);
  CHECK_THROWS_AS(universally_p_generates(a5, c5, 7), PreconditionError);

  for (const char* gens : {"(1,2,3,4),(1,3)", "(1,2,3),(2,3,4)", "(1,2,3),(1,2),(4,5)", "(1,2,3,4,5),(1,2)"}) {
    auto g = G(gens, 5);
    auto lat = SubgroupLattice::enumerate(g);
    for (std::size_t i = 1; i < lat.size(); i += 2)
      for (std::uint64_t p : {2u, 3u}) {
        if (p_part(g.order(), p) == 1) continue;
        auto k = lat.as_group(i);
        CHECK(universally_p_generates(g, k, p).verdict == universal_by_lattice(g, k, p));
        // Conjugation invariance.
        auto kc = conjugate_group(k, g.generators().back());
        CHECK(universally_p_generates(g, kc, p).verdict == universally_p_generates(g, k, p).verdict);
      }
  }
}

TEST_CASE("univ_gen_via_maximal_indices") {
  auto a5 = alternating_group(5);
  auto lat = SubgroupLattice::enumerate(a5);
  CHECK(univ_gen_via_maximal_indices(a5, 5, 2, lat));
  auto s3 = symmetric_group(3);
  CHECK(univ_gen_via_maximal_indices(s3, 3, 2, SubgroupLattice::enumerate(s3)));
  auto a7 = alternating_group(7);
  CHECK_FALSE(univ_gen_via_maximal_indices(a7, 7, 2, SubgroupLattice::enumerate(a7, 2520)));
  CHECK_THROWS_AS(univ_gen_via_maximal_indices(s3, 3, 2, lat), MismatchError);
  // Overgroup family of a Sylow 2-subgroup gives the same verdicts.
  auto over = SubgroupLattice::overgroups(a7, sylow(a7, 2), 2520);
  CHECK_FALSE(univ_gen_via_maximal_indices(a7, 7, 2, over));
  CHECK(univ_gen_via_maximal_indices(a7, 5, 2, over) == univ_gen_via_maximal_indices(a7, 5, 2, SubgroupLattice::enumerate(a7, 2520)));
  auto s5 = symmetric_group(5);
  CHECK_THROWS_AS(univ_gen_via_maximal_indices(s5, 3, 2, SubgroupLattice::overgroups(s5, sylow(s5, 3), 120)), PreconditionError);

  // Agreement with the direct sweep.
  for (const char* gens : {"(1,2,3,4),(1,3)", "(1,2,3),(2,3,4)", "(1,2,3,4,5),(1,2)", "(1,2,3),(1,2),(4,5)"}) {
    auto g = G(gens, 5);
    auto l = SubgroupLattice::enumerate(g);
    for (std::uint64_t p : {2u, 3u, 5u})
      for (std::uint64_t r : {2u, 3u, 5u}) {
        if (p == r || p_part(g.order(), p) == 1 || p_part(g.order(), r) == 1) continue;
        CHECK(univ_gen_via_maximal_indices(g, r, p, l) == universally_p_generates(g, sylow(g, r), p).verdict);
      }
  }
}

TEST_CASE("alternating claims") {
  CHECK(alternating_claim_test_count(9) == 40320);
  CHECK(alternating_claim_test_count(10) == 403200);
  CHECK(alternating_claim_test_count(7) == 720);
  CHECK_THROWS_AS(check_alternating_claims(4), PreconditionError);

  auto r7 = check_alternating_claims(7);
  CHECK_FALSE(r7.verdict);
  CHECK(r7.tests == 720);
  REQUIRE(r7.witnesses.size() == 2);
  for (const auto& w : r7.witnesses) {
    CHECK(w.generated_order == 168);
    CHECK(element_order(w.element) == 7);
  }
  auto r5 = check_alternating_claims(5);
  CHECK(r5.verdict);
  auto r9 = check_alternating_claims(9);
  CHECK(r9.verdict);
  CHECK(r9.tests == 40320);
}

TEST_CASE("diagonal universal generation") {
  auto a5 = alternating_group(5);
  auto c5 = group_from_text("(1,2,3,4,5)", 5);
  CHECK(check_diagonal_universal(a5, c5, 2, 1).verdict);
  auto r2 = check_diagonal_universal(a5, c5, 2, 2);
  CHECK(r2.verdict);
  CHECK(r2.tests == 25);
  auto a7 = alternating_group(7);
  auto r7 = check_diagonal_universal(a7, group_from_text("(1,2,3,4,5,6,7)", 7), 2, 2);
  CHECK_FALSE(r7.verdict);
  REQUIRE(r7.witnesses.size() == 1);
  CHECK(r7.witnesses[0].generated_order < BigInt(2520) * 2520);
}

TEST_CASE("fixed-point-free Sylow 2 elements") {
  for (unsigned n : {10u, 12u, 4u, 8u}) {
    auto r = sylow2_fixed_point_free_element(n);
    REQUIRE(r.witness);
    CHECK(fixed_point_count(*r.witness) == 0);
    CHECK(sign(*r.witness) == 1);
    CHECK(sylow(alternating_group(n), 2).contains(*r.witness));
  }
  auto r10 = sylow2_fixed_point_free_element(10);
  auto ct = cycle_type(*r10.witness);
  CHECK((ct == std::vector<std::size_t>{2, 2, 2, 2, 2} || ct == std::vector<std::size_t>{4, 2, 2, 2}));
  CHECK_FALSE(sylow2_fixed_point_free_element(7).witness);
  CHECK_FALSE(sylow2_fixed_point_free_element(7).reason.empty());
}

TEST_CASE("imprimitive parity identity") {
  auto a = imprimitive_parity_identity(9, 3);
  CHECK(a.value == 280);
  CHECK(a.even);
  CHECK(imprimitive_parity_identity(15, 5).value == 126126);
  CHECK(imprimitive_parity_identity(15, 3).value == 1401400);
  CHECK_THROWS_AS(imprimitive_parity_identity(9, 1), PreconditionError);
  CHECK_THROWS_AS(imprimitive_parity_identity(9, 9), PreconditionError);
  CHECK_THROWS_AS(imprimitive_parity_identity(9, 2), PreconditionError);
  // Independent check: count set partitions into blocks of size d directly for small n.
  CHECK(imprimitive_parity_identity(6, 2).value == 15);
  CHECK(imprimitive_parity_identity(6, 3).value == 10);
  for (unsigned n = 3; n <= 40; ++n)
    for (unsigned d = 2; d < n; ++d) {
      if (n % d) continue;
      auto r = imprimitive_parity_identity(n, d);
      CHECK(r.factor_identity);
      if (n % 2 && n <= 35) CHECK(r.even);
    }
}
