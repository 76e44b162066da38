#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cosets/coset_poset.hpp"
#include "cosets/errors.hpp"
#include "cosets/standard_groups.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cosets;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const GeneratedGroup& g) {
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

using PermSet = std::vector<Permutation>;

// All right cosets of all proper subgroups as literal sorted permutation sets.
std::vector<PermSet> literal_cosets(const SubgroupLattice& lat) {
  const auto& t = lat.table();
  std::set<PermSet> out;
  for (std::size_t s = 0; s + 1 < lat.size(); ++s)
    for (ElementId x = 0; x < t.size(); ++x) {
      PermSet c;
      for (ElementId h : lat.subgroup(s).elements) c.push_back(t.element(h) * t.element(x));
      std::sort(c.begin(), c.end());
      out.insert(c);
    }
  return {out.begin(), out.end()};
}

std::size_t literal_relations(const std::vector<PermSet>& cosets) {
  std::size_t n = 0;
  for (const auto& a : cosets)
    for (const auto& b : cosets)
      if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) ++n;
  return n;
}

PermSet as_perms(const CosetPoset& cp, std::uint32_t v) {
  PermSet out;
  for (ElementId e : cp.coset_elements(v)) out.push_back(cp.lattice().table().element(e));
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices with p^-1 S k = S for all p in P, k in K, by brute force.
std::vector<std::uint32_t> fixed_by_orbit(const CosetPoset& cp, const GeneratedGroup& p, const GeneratedGroup& k) {
  auto pe = oracle::closure(p.generators(), p.degree());
  auto ke = oracle::closure(k.generators(), k.degree());
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < cp.size(); ++v) {
    const PermSet s = as_perms(cp, v);
    bool fixed = true;
    for (const auto& a : pe) {
      for (const auto& b : ke) {
        PermSet img;
        for (const auto& x : s) img.push_back(inverse(a) * x * b);
        std::sort(img.begin(), img.end());
        if (img != s) { fixed = false; break; }
      }
      if (!fixed) break;
    }
    if (fixed) out.push_back(v);
  }
  return out;
}

std::size_t index_sum(const SubgroupLattice& lat) {
  std::size_t n = 0;
  for (std::size_t s = 0; s < lat.index_of_parent(); ++s) n += lat.table().size() / lat.subgroup(s).order();
  return n;
}

}  // namespace

TEST_CASE("coset poset sizes") {
  auto z2 = cyclic_group(2);
  auto c2 = build_coset_poset(z2, lattice_of(z2));
  CHECK(c2.size() == 2);
  CHECK(c2.relation_count() == 0);

  auto v4g = group_from_text("(1,2),(3,4)", 4);
  auto v4 = build_coset_poset(v4g, lattice_of(v4g));
  CHECK(v4.size() == 10);
  CHECK(v4.relation_count() == 12);

  auto s3g = symmetric_group(3);
  auto s3 = build_coset_poset(s3g, lattice_of(s3g));
  CHECK(s3.size() == 17);
  CHECK(s3.relation_count() == 24);
  CHECK_FALSE(is_antichain(s3));
}

TEST_CASE("coset poset agrees with literal cosets") {
  for (const char* gens : {"(1,2,3),(1,2)", "(1,2,3,4),(1,3)", "(1,2)(3,4),(1,3)(2,4),(1,2,3)", "(1,2,3,4,5,6)"}) {
    auto g = group_from_text(gens, 6);
    auto lat = lattice_of(g);
    auto cp = build_coset_poset(g, lat);
    auto lit = literal_cosets(*lat);
    CHECK(cp.size() == lit.size());
    CHECK(cp.size() == index_sum(*lat));
    CHECK(cp.relation_count() == literal_relations(lit));
    for (std::uint32_t u = 0; u < cp.size(); ++u) {
      CHECK(cp.vertex(u).rep == cp.coset_elements(u).front());
      for (std::uint32_t v : cp.order().above(u)) {
        auto a = cp.coset_elements(u), b = cp.coset_elements(v);
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        CHECK(cp.lattice().includes(cp.vertex(u).subgroup, cp.vertex(v).subgroup));
      }
    }
  }
}

TEST_CASE("relative coset posets") {
  auto s3g = symmetric_group(3);
  auto a3 = alternating_group(3);
  auto rel = build_relative_poset(s3g, a3, lattice_of(s3g));
  CHECK(rel.size() == 9);
  CHECK(is_antichain(rel));

  auto z4 = cyclic_group(4);
  auto z2 = group_from_text("(1,3)(2,4)", 4);
  auto e = build_relative_poset(z4, z2, lattice_of(z4));
  CHECK(e.empty());
  CHECK(is_antichain(e));

  auto a5 = alternating_group(5);
  auto lat = lattice_of(a5);
  CHECK(build_relative_poset(a5, a5, lat).vertices() == build_coset_poset(a5, lat).vertices());
  auto a7 = alternating_group(7);
  auto up = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(a7, sylow(a7, 2)));
  auto full = build_coset_poset(a7, up);
  CHECK(build_relative_poset(a7, a7, up).vertices() == full.vertices());
  CHECK(full.relation_count() == build_relative_poset(a7, a7, up).relation_count());

  CHECK_THROWS_AS(build_relative_poset(s3g, group_from_text("(1,2)", 3), lattice_of(s3g)), PreconditionError);
  CHECK_THROWS_AS(build_coset_poset(a5, lattice_of(s3g)), MismatchError);
}

TEST_CASE("abelian minimal normal subgroups give antichains") {
  auto s4 = symmetric_group(4);
  auto v4 = group_from_text("(1,2)(3,4),(1,3)(2,4)", 4);
  auto rel = build_relative_poset(s4, v4, lattice_of(s4));
  CHECK(is_antichain(rel));
  CHECK(rel.size() % 4 == 0);
  CHECK(rel.size() > 0);
}

TEST_CASE("relative membership is conjugation invariant") {
  auto s4 = symmetric_group(4);
  auto lat = lattice_of(s4);
  auto rel = build_relative_poset(s4, alternating_group(4), lat);
  std::set<std::uint32_t> subs(rel.subgroups().begin(), rel.subgroups().end());
  for (const auto& g : s4.generators())
    for (auto s : subs) CHECK(subs.count(static_cast<std::uint32_t>(*lat->conjugate_index(s, lat->table().id(g)))) == 1);
}

TEST_CASE("translation fixed points") {
  auto z2 = cyclic_group(2);
  auto cz2 = build_coset_poset(z2, lattice_of(z2));
  CHECK(translation_fixed_points(cz2, z2, GeneratedGroup::trivial(2)).empty());

  auto s3 = symmetric_group(3);
  auto cs3 = build_coset_poset(s3, lattice_of(s3));
  auto c3 = alternating_group(3);
  auto fixed = translation_fixed_points(cs3, c3, c3);
  REQUIRE(fixed.size() == 2);
  for (auto v : fixed) CHECK(cs3.lattice().subgroup(cs3.vertex(v).subgroup).order() == 3);
  CHECK(fixed == fixed_by_orbit(cs3, c3, c3));
  CHECK_THROWS_AS(translation_fixed_points(cs3, group_from_text("(1,2,3,4)", 4), c3), std::exception);

  // Against the orbit oracle on sampled pairs of S4 subgroups.
  auto s4 = symmetric_group(4);
  auto lat = lattice_of(s4);
  auto cs4 = build_coset_poset(s4, lat);
  for (std::size_t i = 0; i < lat->size(); i += 3)
    for (std::size_t j = 1; j < lat->size(); j += 5) {
      auto p = lat->as_group(i), k = lat->as_group(j);
      CHECK(translation_fixed_points(cs4, p, k) == fixed_by_orbit(cs4, p, k));
    }
}

TEST_CASE("translation fixed points in A7 over the overgroups of a Sylow 2-subgroup") {
  auto a7 = alternating_group(7);
  auto p = sylow(a7, 2);
  auto up = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(a7, p));
  auto cp = build_coset_poset(a7, up);
  // Find a 7-cycle h with <P, h> proper.
  const auto& t = up->table();
  std::optional<GeneratedGroup> k;
  for (ElementId e = 0; e < t.size() && !k; ++e) {
    const auto x = t.element(e);
    if (element_order(x) == 7) {
      std::vector<Permutation> gens = p.generators();
      gens.push_back(x);
      if (GeneratedGroup(gens, 7).order() < 2520) k = GeneratedGroup({x}, 7);
    }
  }
  REQUIRE(k);
  auto fixed = translation_fixed_points(cp, p, *k);
  CHECK_FALSE(fixed.empty());
  for (auto v : fixed) CHECK(up->subgroup(cp.vertex(v).subgroup).order() == 168);
  CHECK(fixed == fixed_by_orbit(cp, p, *k));
}

TEST_CASE("action triples") {
  auto s3 = symmetric_group(3);
  auto cs3 = build_coset_poset(s3, lattice_of(s3));
  auto all = action_fixed_points(cs3, ActionGroup({ActionTriple::identity(3)}));
  CHECK(all.size() == cs3.size());

  auto c = parse_cycles("(1,2,3)", 3);
  ActionGroup e({ActionTriple::left(c), ActionTriple::right(c)});
  CHECK(e.order() == 9);
  CHECK(e.is_closed());
  CHECK(action_fixed_points(cs3, e) == translation_fixed_points(cs3, alternating_group(3), alternating_group(3)));

  // Composition law against sequential application, and order preservation.
  auto s4 = symmetric_group(4);
  auto cs4 = build_coset_poset(s4, lattice_of(s4));
  auto s5 = symmetric_group(5);
  auto a4 = alternating_group(4);
  auto ca4 = build_coset_poset(a4, lattice_of(a4));
  OvergroupAutomorphism swap(s4, parse_cycles("(1,2)", 4), a4);
  std::mt19937 rng(11);
  auto random_elt = [&](const CosetPoset& cp) { return cp.lattice().table().element(static_cast<ElementId>(rng() % cp.lattice().table().size())); };
  for (int trial = 0; trial < 20; ++trial) {
    ActionTriple a{random_elt(ca4), random_elt(ca4), trial % 2 ? swap.conjugator() : Permutation(4)};
    ActionTriple b{random_elt(ca4), random_elt(ca4), trial % 3 ? swap.conjugator() : Permutation(4)};
    auto ma = ca4.image_map(a), mb = ca4.image_map(b), mab = ca4.image_map(compose(a, b));
    for (std::uint32_t v = 0; v < ca4.size(); ++v) CHECK(mab[v] == mb[ma[v]]);
    for (std::uint32_t u = 0; u < ca4.size(); u += 7)
      for (std::uint32_t v = 0; v < ca4.size(); v += 3) CHECK(ca4.less(u, v) == ca4.less(ma[u], ma[v]));
    // Literal image of a coset.
    const std::uint32_t v = static_cast<std::uint32_t>(rng() % ca4.size());
    PermSet img;
    for (const auto& x : as_perms(ca4, v)) img.push_back(conjugate(inverse(a.g) * x * a.h, a.c));
    std::sort(img.begin(), img.end());
    CHECK(img == as_perms(ca4, ma[v]));
  }
  CHECK_THROWS_AS(OvergroupAutomorphism(s5, parse_cycles("(4,5)", 5), group_from_text("(1,2,3,4)", 5)), PreconditionError);
  (void)cs4;
}

TEST_CASE("dump format") {
  auto z2 = cyclic_group(2);
  auto cp = build_coset_poset(z2, lattice_of(z2));
  std::ostringstream os;
  dump_poset(os, cp);
  CHECK(os.str() == "1:()\n1:(1,2)\n\n");
  auto s3 = symmetric_group(3);
  std::ostringstream os3;
  dump_poset(os3, build_coset_poset(s3, lattice_of(s3)));
  const auto text = os3.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 17 + 1 + 24);
}
