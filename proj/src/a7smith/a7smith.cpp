#include "cosets/a7smith.hpp"

#include <algorithm>
#include <set>

#include "cosets/complex.hpp"
#include "cosets/errors.hpp"
#include "cosets/standard_groups.hpp"

namespace cosets {

void PropertyReport::add(std::string name, bool pass, std::string detail) {
  items.push_back({std::move(name), pass, std::move(detail)});
}

bool PropertyReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

Permutation phi_conjugator() { return parse_cycles("(1,2)(3,4)(5,6)", 7); }

namespace {

using ElementSet = std::vector<Permutation>;

// Conjugacy class of h under the generators of g, as element sets.
std::vector<GeneratedGroup> conjugacy_class(const GeneratedGroup& g, const GeneratedGroup& h) {
  std::set<ElementSet> seen{h.elements()};
  std::vector<GeneratedGroup> out{h};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators()) {
      GeneratedGroup next = conjugate_group(out[i], s);
      if (seen.insert(next.elements()).second) out.push_back(std::move(next));
    }
  return out;
}

bool contains_7_cycle(const GeneratedGroup& h) {
  const auto elems = h.elements();
  return std::any_of(elems.begin(), elems.end(), [](const Permutation& x) { return cycle_type(x) == std::vector<std::size_t>{7}; });
}

// Every 7-cycle on 7 points, (1, a_2, ..., a_7) in lexicographic order of the tail.
std::vector<Permutation> seven_cycles() {
  std::vector<Point> tail{1, 2, 3, 4, 5, 6};
  std::vector<Permutation> out;
  do {
    std::vector<Point> images(7);
    std::vector<Point> order{0};
    order.insert(order.end(), tail.begin(), tail.end());
    for (std::size_t i = 0; i < 7; ++i) images[order[i]] = order[(i + 1) % 7];
    out.push_back(Permutation::from_images(std::move(images)));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

bool simple_fingerprint(const GeneratedGroup& h) {
  if (h.is_abelian()) return false;
  for (const auto& x : h.elements())
    if (!x.is_identity() && normal_closure(h, {x}).order() != h.order()) return false;
  return true;
}

}  // namespace

A7Environment A7Environment::build() {
  GeneratedGroup a7 = alternating_group(7);
  GeneratedGroup s7 = symmetric_group(7);
  const Permutation c = phi_conjugator();
  OvergroupAutomorphism phi(s7, c, a7);

  std::optional<GeneratedGroup> p;
  for (const auto& q : conjugacy_class(a7, sylow(a7, 2)))
    if (normalizes(c, q)) {
      p = q;
      break;
    }
  if (!p) throw Error("no Sylow 2-subgroup of A7 is normalized by phi");

  std::optional<Permutation> h;
  for (const auto& x : seven_cycles()) {
    const GeneratedGroup cyc({x}, 7);
    if (normalizes(c, cyc)) {
      h = x;
      break;
    }
  }
  if (!h) throw Error("no Sylow 7-subgroup of A7 is normalized by phi");
  return A7Environment{std::move(a7), std::move(s7), std::move(*p), std::move(*h), std::move(phi)};
}

std::vector<GeneratedGroup> overgroups_of_sylow2(const A7Environment& env) {
  const auto lat = SubgroupLattice::overgroups(env.a7, env.p);
  std::vector<GeneratedGroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(lat.as_group(i));
  return out;
}

OvergroupCensus overgroup_census(const A7Environment& env) {
  OvergroupCensus c;
  c.overgroups = overgroups_of_sylow2(env);
  for (std::size_t i = 0; i + 1 < c.overgroups.size(); ++i)
    if (contains_7_cycle(c.overgroups[i])) c.with_7_cycle.push_back(c.overgroups[i]);
  c.fingerprints_simple = !c.with_7_cycle.empty();
  std::vector<std::vector<GeneratedGroup>> classes;
  for (const auto& h : c.with_7_cycle) {
    classes.push_back(conjugacy_class(env.a7, h));
    c.class_sizes.push_back(classes.back().size());
    c.fingerprints_simple = c.fingerprints_simple && simple_fingerprint(h);
  }
  if (c.with_7_cycle.size() == 2) {
    const auto& a = c.with_7_cycle[0];
    const auto& b = c.with_7_cycle[1];
    c.swapped_by_phi = env.phi(a).same_group(b) && env.phi(b).same_group(a);
    c.conjugate_in_a7 = std::any_of(classes[0].begin(), classes[0].end(), [&](const GeneratedGroup& x) { return x.same_group(b); });
  }
  return c;
}

bool sylow_conjugates_generate(const GeneratedGroup& k, std::uint64_t p, std::uint64_t r) {
  const GeneratedGroup q = sylow(k, p);
  const GeneratedGroup rr = sylow(k, r);
  std::vector<Permutation> gens;
  for (const auto& x : rr.elements())
    for (const auto& s : q.generators()) gens.push_back(conjugate(s, x));
  return GeneratedGroup(gens, k.degree()).order() == k.order();
}

bool check_pgl_strong_generation(const GeneratedGroup& k) {
  if (k.order() != 168) throw PreconditionError("check_pgl_strong_generation expects a group of order 168");
  return sylow_conjugates_generate(k, 2, 7);
}

PropertyReport check_phi_properties(const A7Environment& env) {
  PropertyReport r;
  r.subject = "phi = conjugation by " + to_cycle_string(env.phi.conjugator());
  const Permutation& c = env.phi.conjugator();
  r.add("phi squared is the identity", (c * c).is_identity());
  r.add("phi normalizes A7", normalizes(c, env.a7));
  r.add("P^phi = P", normalizes(c, env.p));
  r.add("<h>^phi = <h>", normalizes(c, env.k()), to_cycle_string(env.seven_cycle));
  const auto census = overgroup_census(env);
  r.add("two proper overgroups of P contain a 7-cycle", census.with_7_cycle.size() == 2,
        std::to_string(census.with_7_cycle.size()));
  // The classes as sets of subgroups: the phi-image of the first class is the second.
  bool classes_swapped = false;
  if (census.with_7_cycle.size() == 2) {
    auto k1 = conjugacy_class(env.a7, census.with_7_cycle[0]);
    auto k2 = conjugacy_class(env.a7, census.with_7_cycle[1]);
    std::set<ElementSet> image, second;
    for (const auto& x : k1) image.insert(env.phi(x).elements());
    for (const auto& x : k2) second.insert(x.elements());
    classes_swapped = image == second;
  }
  r.add("phi maps the first class onto the second", classes_swapped);
  return r;
}

PropertyReport check_rho_on_power(const A7Environment& env, std::size_t t) {
  if (t < 1 || t > 2) throw BudgetError("check_rho_on_power supports t = 1 or 2");
  PropertyReport r;
  r.subject = "rho on A7^" + std::to_string(t);
  const Permutation rho = diagonal_element(phi_conjugator(), t);
  r.add("rho has order 2", element_order(rho) == 2);
  const GeneratedGroup n = direct_power(env.a7, t);
  r.add("rho normalizes N", normalizes(rho, n));
  bool factors = true;
  for (std::size_t i = 0; i < t; ++i) factors = factors && normalizes(rho, block_factor(env.a7, i, t));
  r.add("rho normalizes every factor", factors);
  std::vector<Permutation> pgens;
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& s : env.p.generators()) pgens.push_back(embed_in_block(s, i, t));
  const GeneratedGroup p(pgens, 7 * t);
  r.add("rho normalizes P = P_1...P_t", normalizes(rho, p), "|P| = " + p.order().str());
  const GeneratedGroup k({diagonal_element(env.seven_cycle, t)}, 7 * t);
  r.add("rho normalizes K = <(h,...,h)>", k.contains(conjugate(k.generators()[0], rho)));
  // Inside one factor: the rho-invariant overgroups of P_i containing h_i.
  const auto lat = SubgroupLattice::overgroups(env.a7, env.p);
  std::size_t invariant_with_h = 0;
  bool only_top = true;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const GeneratedGroup h = lat.as_group(i);
    if (!h.contains(env.seven_cycle) || !normalizes(phi_conjugator(), h)) continue;
    ++invariant_with_h;
    only_top = only_top && h.order() == 2520;
  }
  r.add("the only rho-invariant overgroup of P_i containing h_i is L_i", invariant_with_h == 1 && only_top,
        std::to_string(invariant_with_h));
  if (t == 1) r.add("t = 1 agrees with the phi checks", check_phi_properties(env).passed());
  return r;
}

SmithActionSpec SmithActionSpec::make(GeneratedGroup g, GeneratedGroup n, GeneratedGroup p, GeneratedGroup k,
                                      OvergroupAutomorphism theta) {
  if (!is_normal_in(n, g)) throw PreconditionError("Smith action: N is not normal in G");
  if (!p.is_subgroup_of(n) || !k.is_subgroup_of(n)) throw PreconditionError("Smith action: P and K must lie in N");
  const Permutation& c = theta.conjugator();
  if (!normalizes(c, g) || !normalizes(c, n) || !normalizes(c, p) || !normalizes(c, k))
    throw PreconditionError("Smith action: theta must normalize G, N, P and K");
  std::vector<ActionTriple> gens;
  for (const auto& s : p.generators()) gens.push_back(ActionTriple::left(s));
  for (const auto& s : k.generators()) gens.push_back(ActionTriple::right(s));
  gens.push_back(ActionTriple::automorphism(theta));
  ActionGroup e(std::move(gens));
  return SmithActionSpec{std::move(g), std::move(n), std::move(p), std::move(k), std::move(theta), std::move(e)};
}

PropertyReport SmithActionSpec::series_shape() const {
  PropertyReport r;
  r.subject = "E = (P x K) x| <theta>";
  const BigInt pk = p.order() * k.order();
  const auto theta_order = element_order(theta.conjugator());
  r.add("|E| = |P||K||theta|", BigInt(e.order()) == pk * theta_order, std::to_string(e.order()));
  r.add("theta has order 2", theta_order == 2);
  const bool p_group = p.order() > 1 && p_part(p.order(), factorize(p.order_u64()).front().first) == p.order();
  r.add("P is a p-group", p_group);
  r.add("K is cyclic", k.generators().size() <= 1);
  // Translations: triples with trivial automorphism part.
  std::vector<ActionTriple> translations;
  for (const auto& x : e.elements())
    if (x.c.is_identity()) translations.push_back(x);
  r.add("translations have order |P||K|", BigInt(translations.size()) == pk);
  bool normal = true;
  for (const auto& s : e.generators()) {
    const ActionTriple si = [&] {
      for (const auto& x : e.elements())
        if (compose(s, x) == ActionTriple::identity(s.g.degree())) return x;
      return s;
    }();
    for (const auto& x : translations) {
      const ActionTriple y = compose(compose(si, x), s);
      normal = normal && y.c.is_identity() && e.contains(y);
    }
  }
  r.add("P x K is normal in E", normal);
  r.add("E is closed", e.is_closed());
  return r;
}

namespace {

OvergroupAutomorphism theta_for(const A7Environment& env, const GeneratedGroup& g) {
  return OvergroupAutomorphism(env.s7, phi_conjugator(), g);
}

}  // namespace

SmithActionSpec a7_smith_spec(const A7Environment& env) {
  return SmithActionSpec::make(env.a7, env.a7, env.p, env.k(), theta_for(env, env.a7));
}

SmithActionSpec s7_smith_spec(const A7Environment& env) {
  return SmithActionSpec::make(env.s7, env.a7, env.p, env.k(), theta_for(env, env.s7));
}

SmithResult smith_fixed_point_check(const SmithActionSpec& spec) {
  // Every vertex fixed by the left translations from P is a coset of an
  // overgroup of P, so the overgroup family carries all candidates.
  auto lattice = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(spec.g, spec.p));
  SmithResult out;
  out.poset = std::make_shared<const CosetPoset>(build_relative_poset(spec.g, spec.n, lattice));
  std::vector<ActionTriple> translations;
  for (const auto& x : spec.e.generators())
    if (x.c.is_identity()) translations.push_back(x);
  out.translation_fixed = action_fixed_points(*out.poset, translations);
  out.criterion_agrees = out.translation_fixed == translation_fixed_points(*out.poset, spec.p, spec.k);
  out.fixed = action_fixed_points(*out.poset, spec.e);
  return out;
}

PropertyReport abelian_antichain_check(const GeneratedGroup& g, const GeneratedGroup& n) {
  if (!is_normal_in(n, g) || !n.is_abelian() || n.is_trivial())
    throw PreconditionError("abelian_antichain_check: N must be a nontrivial abelian normal subgroup");
  const auto minimal = minimal_normal_subgroups(g);
  if (std::none_of(minimal.begin(), minimal.end(), [&](const GeneratedGroup& m) { return m.same_group(n); }))
    throw PreconditionError("abelian_antichain_check: N is not minimal normal");
  PropertyReport r;
  r.subject = "C(G, N) for |G| = " + g.order().str() + ", |N| = " + n.order().str();
  auto lattice = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
  const auto poset = build_relative_poset(g, n, lattice);
  r.add("antichain", is_antichain(poset));
  r.add("|N| divides the size", poset.size() % n.order_u64() == 0, std::to_string(poset.size()));
  const auto betti = reduced_betti(order_complex(poset.order()), 2);
  r.add("beta_{-1} + beta_0 > 0 over GF(2)", betti.at(-1) + betti.at(0) > 0);
  return r;
}

}  // namespace cosets
