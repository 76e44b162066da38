#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>

#include "cosets/a7smith.hpp"
#include "cosets/complex.hpp"
#include "cosets/coset_poset.hpp"
#include "cosets/errors.hpp"
#include "cosets/genchecks.hpp"
#include "cosets/hallzeta.hpp"
#include "cosets/standard_groups.hpp"
#include "cosets/verify.hpp"

namespace cosets {

using nlohmann::json;

namespace {

// Full lattices shared by the jobs of one run; each is built once.
class LatticeCache {
 public:
  explicit LatticeCache(std::uint64_t bound) : bound_(bound) {}

  std::shared_ptr<const SubgroupLattice> get(const std::string& key, const GeneratedGroup& g) {
    std::shared_future<std::shared_ptr<const SubgroupLattice>> f;
    std::promise<std::shared_ptr<const SubgroupLattice>> mine;
    bool build = false;
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it == map_.end()) {
        f = mine.get_future().share();
        map_.emplace(key, f);
        build = true;
      } else {
        f = it->second;
      }
    }
    if (build) {
      try {
        mine.set_value(std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g, bound_)));
      } catch (...) {
        mine.set_exception(std::current_exception());
      }
    }
    return f.get();
  }

 private:
  std::uint64_t bound_;
  std::mutex mu_;
  std::map<std::string, std::shared_future<std::shared_ptr<const SubgroupLattice>>> map_;
};

const A7Environment& a7_env() {
  static const A7Environment env = A7Environment::build();
  return env;
}

json betti_json(const BettiVector& b) { return b.values; }

std::vector<std::string> gens_text(const GeneratedGroup& g) {
  std::vector<std::string> out;
  for (const auto& x : g.generators()) out.push_back(to_cycle_string(x));
  return out;
}

json report_items(const PropertyReport& r) {
  json out = json::array();
  for (const auto& item : r.items) out.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  return out;
}

json witnesses_json(const GenerationReport& r) {
  json out = json::array();
  for (const auto& w : r.witnesses)
    out.push_back({{"element", to_cycle_string(w.element)}, {"generated_order", w.generated_order.str()}, {"note", w.note}});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// ---- reciprocity ----

std::vector<SuiteJob> reciprocity_jobs(const std::vector<GroupCatalogEntry>& catalog, const SuiteConfig& cfg,
                                       std::shared_ptr<LatticeCache> cache) {
  std::vector<SuiteJob> jobs;
  for (const auto& e : catalog) {
    const std::uint64_t n = e.group.order_u64();
    if (n > cfg.reciprocity_max_order) continue;
    jobs.push_back({"reciprocity", e.name, [e, cache](Record& r) {
                      auto lat = cache->get(e.name, e.group);
                      auto mu = moebius_to_top(*lat);
                      auto poly = hall_polynomial(e.group, *lat, mu);
                      const ExactRational at_minus_one = evaluate(poly, -1);
                      auto poset = build_coset_poset(e.group, lat);
                      auto cx = order_complex(poset.order());
                      const long long chi = reduced_euler_characteristic(cx);
                      const long long mu_hat = poset_moebius_hat(poset.order());
                      r.values = {{"order", e.group.order().str()},
                                  {"subgroups", lat->size()},
                                  {"vertices", poset.size()},
                                  {"f_vector", cx.f_vector()},
                                  {"hall_polynomial", poly.to_string()},
                                  {"P(-1)", to_string(at_minus_one)},
                                  {"reduced_euler_characteristic", chi},
                                  {"moebius_hat", mu_hat}};
                      r.pass = at_minus_one == ExactRational(-chi) && chi == mu_hat;
                    }});
  }
  for (const auto& e : catalog) {
    const std::uint64_t n = e.group.order_u64();
    if (n > cfg.lattice_bound || n * n > kTupleBudget) continue;
    jobs.push_back({"reciprocity", e.name + " oracle", [e, cache](Record& r) {
                      auto lat = cache->get(e.name, e.group);
                      auto poly = hall_polynomial(e.group, *lat, moebius_to_top(*lat));
                      bool ok = true;
                      for (int k : {1, 2}) {
                        const ExactRational hall = evaluate(poly, k);
                        const ExactRational brute = brute_force_generation_probability(e.group, static_cast<unsigned>(k));
                        r.values["P(" + std::to_string(k) + ")"] = to_string(hall);
                        r.values["oracle(" + std::to_string(k) + ")"] = to_string(brute);
                        ok = ok && hall == brute;
                      }
                      r.values["order"] = e.group.order().str();
                      r.pass = ok;
                    }});
  }
  return jobs;
}

// ---- homology ----

std::vector<SuiteJob> homology_jobs(const std::vector<GroupCatalogEntry>& catalog, const SuiteConfig& cfg,
                                    std::shared_ptr<LatticeCache> cache) {
  std::vector<SuiteJob> jobs;
  const unsigned p = cfg.prime;
  for (const auto& e : catalog) {
    const std::uint64_t n = e.group.order_u64();
    if (n <= 1 || n > cfg.max_order) continue;
    jobs.push_back({"homology", e.name, [e, cache, p](Record& r) {
                      auto lat = cache->get(e.name, e.group);
                      auto poset = build_coset_poset(e.group, lat);
                      auto cx = order_complex(poset.order());
                      auto b = reduced_betti(cx, p);
                      r.values = {{"order", e.group.order().str()},
                                  {"prime", p},
                                  {"vertices", poset.size()},
                                  {"f_vector", cx.f_vector()},
                                  {"reduced_euler_characteristic", reduced_euler_characteristic(cx)},
                                  {"betti", betti_json(b)}};
                      r.pass = !b.is_zero() && b.euler_characteristic() == reduced_euler_characteristic(cx);
                    }});
    // Minimal normal subgroups are found inside the job; the count is not known yet,
    // so one job handles all of them.
    jobs.push_back({"homology", e.name + " relative", [e, cache, p](Record& r) {
                      auto lat = cache->get(e.name, e.group);
                      bool ok = true;
                      json rel = json::array();
                      for (const auto& nn : minimal_normal_subgroups(e.group)) {
                        auto poset = build_relative_poset(e.group, nn, lat);
                        auto cx = order_complex(poset.order());
                        auto b = reduced_betti(cx, p);
                        json item = {{"n_order", nn.order().str()},
                                     {"n_generators", gens_text(nn)},
                                     {"vertices", poset.size()},
                                     {"antichain", is_antichain(poset)},
                                     {"betti", betti_json(b)}};
                        bool good = !b.is_zero();
                        if (nn.is_abelian()) {
                          auto check = abelian_antichain_check(e.group, nn);
                          item["abelian_checks"] = report_items(check);
                          good = good && check.passed();
                        }
                        item["pass"] = good;
                        ok = ok && good;
                        rel.push_back(std::move(item));
                      }
                      r.values = {{"order", e.group.order().str()}, {"prime", p}, {"minimal_normal", rel}};
                      r.pass = ok && !rel.empty();
                    }});
  }
  return jobs;
}

// ---- join ----

struct JoinPair {
  const char* group;
  std::uint64_t n_order;
};
constexpr JoinPair kJoinPairs[] = {{"S3", 3}, {"Z4", 2}, {"S4", 4}, {"Q8", 2}, {"Z6", 3}};

std::vector<SuiteJob> join_jobs(const std::vector<GroupCatalogEntry>& catalog, const SuiteConfig& cfg,
                                std::shared_ptr<LatticeCache> cache) {
  std::vector<SuiteJob> jobs;
  const unsigned p = cfg.prime;
  const std::uint64_t bound = cfg.lattice_bound;
  for (const auto& pair : kJoinPairs) {
    const GroupCatalogEntry* found = find_entry(catalog, pair.group);
    const std::string subject = std::string(pair.group) + " / N of order " + std::to_string(pair.n_order);
    const std::string name = pair.group;
    const std::uint64_t n_order = pair.n_order;
    std::optional<GroupCatalogEntry> e;
    if (found) e = *found;
    jobs.push_back({"join", subject, [e, name, n_order, cache, p, bound](Record& r) {
                      if (!e) throw PreconditionError("group " + name + " is not in the catalog");
                      const GeneratedGroup& g = e->group;
                      std::optional<GeneratedGroup> n;
                      for (auto& m : minimal_normal_subgroups(g))
                        if (m.order() == n_order) {
                          n = m;
                          break;
                        }
                      if (!n) throw PreconditionError(name + " has no minimal normal subgroup of order " + std::to_string(n_order));
                      auto lat = cache->get(name, g);
                      auto whole = reduced_betti(order_complex(build_coset_poset(g, lat).order()), p);
                      auto rel = reduced_betti(order_complex(build_relative_poset(g, *n, lat).order()), p);
                      auto q = quotient_representation(g, *n).group;
                      auto qlat = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(q, bound));
                      auto quot = reduced_betti(order_complex(build_coset_poset(q, qlat).order()), p);
                      auto predicted = kunneth_join_betti(quot, rel);
                      r.values = {{"prime", p},
                                  {"n_generators", gens_text(*n)},
                                  {"betti_G", betti_json(whole)},
                                  {"betti_G_mod_N", betti_json(quot)},
                                  {"betti_relative", betti_json(rel)},
                                  {"kunneth", betti_json(predicted)}};
                      r.pass = predicted == whole;
                    }});
  }
  return jobs;
}

// ---- altgen ----

bool expected_alternating_verdict(unsigned n) {
  // A7 has two classes of PGL(3,2) containing 7-cycles and a Sylow 2-subgroup;
  // AGL(3,2) < A8 contains 7-cycles and a full Sylow 2-subgroup of A8.
  return n != 7 && n != 8;
}

std::vector<SuiteJob> altgen_jobs(const std::vector<GroupCatalogEntry>& catalog, const SuiteConfig& cfg,
                                  std::shared_ptr<LatticeCache> cache) {
  std::vector<SuiteJob> jobs;
  std::vector<unsigned> degrees{5, 6, 7, 8, 9};
  if (cfg.slow) degrees.push_back(10);
  for (unsigned n : degrees)
    jobs.push_back({"altgen", "A" + std::to_string(n) + " cycles", [n](Record& r) {
                      auto rep = check_alternating_claims(n);
                      const bool expected = expected_alternating_verdict(n);
                      r.values = {{"claim", rep.verdict},
                                  {"expected", expected},
                                  {"tests", rep.tests},
                                  {"expected_tests", alternating_claim_test_count(n)},
                                  {"cycle_length", n % 2 ? n : n - 1}};
                      r.witnesses = witnesses_json(rep);
                      r.pass = rep.verdict == expected && rep.tests == alternating_claim_test_count(n);
                    }});

  for (std::size_t t : {std::size_t{1}, std::size_t{2}})
    jobs.push_back({"altgen", "A5^" + std::to_string(t) + " diagonal 5-cycle", [t](Record& r) {
                      const GeneratedGroup a5 = alternating_group(5);
                      const GeneratedGroup c5 = group_from_text("(1,2,3,4,5)", 5);
                      auto rep = check_diagonal_universal(a5, c5, 2, t);
                      const GeneratedGroup n = direct_power(a5, t);
                      const GeneratedGroup k = diagonal_embedding(c5, t);
                      const GeneratedGroup p = sylow(n, 2);
                      // Every P-fixed coset is a coset of an overgroup of P.
                      auto family = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(n, p, n.order_u64()));
                      auto poset = build_relative_poset(n, n, family);
                      const auto fixed = translation_fixed_points(poset, p, k);
                      r.values = {{"universal", rep.verdict},
                                  {"sylow_conjugates", rep.tests},
                                  {"overgroups_of_P", family->size()},
                                  {"fixed_in_C(N)", fixed.size()}};
                      bool ok = rep.verdict && fixed.empty();
                      if (t == 1) {
                        const GeneratedGroup s5 = symmetric_group(5);
                        auto sfam = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(s5, p, 120));
                        const auto sfixed = translation_fixed_points(build_relative_poset(s5, n, sfam), p, k);
                        r.values["fixed_in_C(S5,A5)"] = sfixed.size();
                        ok = ok && sfixed.empty();
                      }
                      r.witnesses = witnesses_json(rep);
                      r.pass = ok;
                    }});

  const std::uint64_t bound = cfg.lattice_bound;
  for (const auto& e : catalog) {
    const std::uint64_t order = e.group.order_u64();
    if (prime_divisors(order).size() < 2) continue;
    jobs.push_back({"altgen", e.name + " maximal indices", [e, cache, bound](Record& r) {
                      const std::uint64_t order = e.group.order_u64();
                      const auto primes = prime_divisors(order);
                      std::shared_ptr<const SubgroupLattice> full;
                      if (order <= bound) full = cache->get(e.name, e.group);
                      bool ok = true;
                      json pairs = json::array();
                      for (std::uint64_t p : primes) {
                        std::shared_ptr<const SubgroupLattice> lat = full;
                        if (!lat)
                          lat = std::make_shared<const SubgroupLattice>(SubgroupLattice::overgroups(e.group, sylow(e.group, p), order));
                        for (std::uint64_t q : primes) {
                          if (q == p) continue;
                          const bool by_index = univ_gen_via_maximal_indices(e.group, q, p, *lat);
                          const bool direct = universally_p_generates(e.group, sylow(e.group, q), p).verdict;
                          pairs.push_back({{"p", p}, {"r", q}, {"maximal_indices", by_index}, {"sylow_sweep", direct}});
                          ok = ok && by_index == direct;
                        }
                      }
                      r.values = {{"order", e.group.order().str()}, {"lattice", full ? "complete" : "overgroups of a Sylow p-subgroup"}, {"pairs", pairs}};
                      r.pass = ok;
                    }});
  }
  return jobs;
}

// ---- a7 ----

std::vector<SuiteJob> a7_jobs() {
  std::vector<SuiteJob> jobs;
  jobs.push_back({"a7", "overgroups of P", [](Record& r) {
                    const auto& env = a7_env();
                    auto c = overgroup_census(env);
                    json orders = json::array(), indices = json::array(), strong = json::array();
                    bool ok = c.with_7_cycle.size() == 2;
                    for (const auto& k : c.with_7_cycle) {
                      orders.push_back(k.order().str());
                      indices.push_back(BigInt(env.a7.order() / k.order()).str());
                      const bool sg = check_pgl_strong_generation(k);
                      strong.push_back(sg);
                      ok = ok && k.order() == 168 && sg;
                      r.witnesses.push_back({{"generators", gens_text(k)}});
                    }
                    json all = json::array();
                    for (const auto& h : c.overgroups) all.push_back(h.order().str());
                    r.values = {{"P_order", env.p.order().str()},
                                {"P_generators", gens_text(env.p)},
                                {"overgroup_orders", all},
                                {"with_7_cycle", c.with_7_cycle.size()},
                                {"orders", orders},
                                {"indices", indices},
                                {"class_sizes", c.class_sizes},
                                {"swapped_by_phi", c.swapped_by_phi},
                                {"conjugate_in_A7", c.conjugate_in_a7},
                                {"simple", c.fingerprints_simple},
                                {"strong_generation", strong}};
                    r.pass = ok && c.swapped_by_phi && !c.conjugate_in_a7 && c.fingerprints_simple &&
                             c.class_sizes == std::vector<std::size_t>{15, 15};
                  }});
  jobs.push_back({"a7", "phi", [](Record& r) {
                    auto rep = check_phi_properties(a7_env());
                    r.values = {{"checks", report_items(rep)}};
                    r.pass = rep.passed();
                  }});
  for (std::size_t t : {std::size_t{1}, std::size_t{2}})
    jobs.push_back({"a7", "rho on A7^" + std::to_string(t), [t](Record& r) {
                      auto rep = check_rho_on_power(a7_env(), t);
                      r.values = {{"checks", report_items(rep)}};
                      r.pass = rep.passed();
                    }});
  auto smith = [](const char* subject, bool symmetric) {
    return SuiteJob{"a7", subject, [symmetric](Record& r) {
                      const auto& env = a7_env();
                      auto spec = symmetric ? s7_smith_spec(env) : a7_smith_spec(env);
                      auto shape = spec.series_shape();
                      auto res = smith_fixed_point_check(spec);
                      r.values = {{"G_order", spec.g.order().str()},
                                  {"N_order", spec.n.order().str()},
                                  {"E_order", spec.e.order()},
                                  {"vertices", res.poset->size()},
                                  {"PxK_fixed", res.translation_fixed.size()},
                                  {"E_fixed", res.fixed.size()},
                                  {"criterion_agrees", res.criterion_agrees},
                                  {"series_shape", report_items(shape)}};
                      for (auto v : res.translation_fixed) {
                        const auto& vx = res.poset->vertex(v);
                        const auto& lat = res.poset->lattice();
                        r.witnesses.push_back({{"subgroup_order", lat.subgroup(vx.subgroup).order()},
                                               {"representative", to_cycle_string(lat.table().element(vx.rep))}});
                      }
                      r.pass = res.fixed.empty() && res.criterion_agrees && shape.passed();
                    }};
  };
  jobs.push_back(smith("Smith action on C(A7)", false));
  jobs.push_back(smith("Smith action on C(S7,A7)", true));
  return jobs;
}

// ---- identities ----

std::vector<SuiteJob> identity_jobs() {
  std::vector<SuiteJob> jobs;
  jobs.push_back({"identities", "factorial quotient = binomial product, n <= 40", [](Record& r) {
                    std::uint64_t pairs = 0;
                    bool ok = true;
                    for (unsigned n = 4; n <= 40; ++n)
                      for (unsigned d = 2; d < n; ++d) {
                        if (n % d) continue;
                        auto v = imprimitive_parity_identity(n, d);  // throws if the two sides differ
                        ok = ok && v.factor_identity;
                        ++pairs;
                      }
                    r.values = {{"pairs", pairs}};
                    r.pass = ok && pairs > 0;
                  }});
  jobs.push_back({"identities", "even for odd n <= 35", [](Record& r) {
                    std::uint64_t pairs = 0;
                    bool ok = true;
                    for (unsigned n = 9; n <= 35; n += 2)
                      for (unsigned d = 3; d < n; d += 2) {
                        if (n % d) continue;
                        auto v = imprimitive_parity_identity(n, d);
                        if (!v.even) r.witnesses.push_back({{"n", n}, {"d", d}, {"value", v.value.str()}});
                        ok = ok && v.even;
                        ++pairs;
                      }
                    r.values = {{"pairs", pairs}};
                    r.pass = ok && pairs > 0;
                  }});
  jobs.push_back({"identities", "fixed-point-free Sylow 2 elements, 4 <= n <= 14", [](Record& r) {
                    bool ok = true;
                    for (unsigned n = 4; n <= 14; ++n) {
                      auto res = sylow2_fixed_point_free_element(n);
                      if (n % 2 == 0) {
                        const bool good = res.witness && fixed_point_count(*res.witness) == 0 && sign(*res.witness) == 1 &&
                                          sylow(alternating_group(n), 2).contains(*res.witness);
                        ok = ok && good;
                        if (res.witness) r.witnesses.push_back({{"n", n}, {"element", to_cycle_string(*res.witness)}});
                      } else {
                        ok = ok && !res.witness;
                      }
                    }
                    r.pass = ok;
                  }});
  return jobs;
}

}  // namespace

std::vector<SuiteJob> suite_jobs(const std::vector<Suite>& suites, const std::vector<GroupCatalogEntry>& catalog,
                                 const SuiteConfig& config) {
  auto cache = std::make_shared<LatticeCache>(config.lattice_bound);
  std::vector<SuiteJob> out;
  for (Suite s : suites) {
    std::vector<SuiteJob> jobs;
    switch (s) {
      case Suite::reciprocity: jobs = reciprocity_jobs(catalog, config, cache); break;
      case Suite::homology: jobs = homology_jobs(catalog, config, cache); break;
      case Suite::join: jobs = join_jobs(catalog, config, cache); break;
      case Suite::altgen: jobs = altgen_jobs(catalog, config, cache); break;
      case Suite::a7: jobs = a7_jobs(); break;
      case Suite::identities: jobs = identity_jobs(); break;
    }
    for (auto& j : jobs) out.push_back(std::move(j));
  }
  return out;
}

}  // namespace cosets
