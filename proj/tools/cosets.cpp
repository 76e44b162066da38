#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cosets/complex.hpp"
#include "cosets/coset_poset.hpp"
#include "cosets/errors.hpp"
#include "cosets/hallzeta.hpp"
#include "cosets/verify.hpp"

using namespace cosets;
using nlohmann::json;

namespace {

struct ComputeOptions {
  std::string group;
  std::string relative;  // generators of N, optional
  std::string catalog = COSETS_DEFAULT_CATALOG;
  unsigned prime = 2;
  std::uint64_t lattice_bound = 2520;
  std::string out;
  bool as_json = false;
};

std::vector<GroupCatalogEntry> catalog_or_empty(const std::string& path) {
  try {
    return load_catalog(path);
  } catch (const Error&) {
    return {};  // inline generators still work
  }
}

CosetPoset poset_for(const ComputeOptions& o, const GeneratedGroup& g, const std::vector<GroupCatalogEntry>& catalog) {
  auto lat = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g, o.lattice_bound));
  if (o.relative.empty()) return build_coset_poset(g, lat);
  GeneratedGroup n = resolve_group(o.relative, catalog);
  n = group_from_generators(n.generators(), g.degree());
  return build_relative_poset(g, n, lat);
}

int compute_homology(const ComputeOptions& o) {
  if (!is_prime(o.prime)) throw PreconditionError("--prime " + std::to_string(o.prime) + " is not prime");
  const auto catalog = catalog_or_empty(o.catalog);
  const GeneratedGroup g = resolve_group(o.group, catalog);
  auto poset = poset_for(o, g, catalog);
  auto cx = order_complex(poset.order());
  auto b = reduced_betti(cx, o.prime);
  json j = {{"order", g.order().str()},
            {"vertices", poset.size()},
            {"f_vector", cx.f_vector()},
            {"reduced_euler_characteristic", reduced_euler_characteristic(cx)},
            {"prime", o.prime},
            {"betti", b.values},
            {"acyclic", b.is_zero()}};
  if (o.as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "|G| = " << g.order() << ", " << poset.size() << " cosets\n";
  std::cout << "f-vector (from dim -1):";
  for (auto f : cx.f_vector()) std::cout << ' ' << f;
  std::cout << "\nreduced Euler characteristic: " << reduced_euler_characteristic(cx) << '\n';
  std::cout << "reduced Betti over GF(" << o.prime << ") (from dim -1):";
  for (auto v : b.values) std::cout << ' ' << v;
  std::cout << '\n' << (b.is_zero() ? "acyclic\n" : "not acyclic\n");
  return 0;
}

int compute_zeta(const ComputeOptions& o) {
  const auto catalog = catalog_or_empty(o.catalog);
  const GeneratedGroup g = resolve_group(o.group, catalog);
  const SubgroupLattice lat = SubgroupLattice::enumerate(g, o.lattice_bound);
  const auto poly = hall_polynomial(g, lat, moebius_to_top(lat));
  json j = {{"order", g.order().str()}, {"subgroups", lat.size()}, {"hall_polynomial", poly.to_string()}};
  for (int k : {-1, 1, 2, 3}) j["P(" + std::to_string(k) + ")"] = to_string(evaluate(poly, k));
  if (o.as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "|G| = " << g.order() << ", " << lat.size() << " subgroups\n";
  std::cout << "P_G(s) coefficients (index:coefficient): " << poly.to_string() << '\n';
  for (int k : {-1, 1, 2, 3}) std::cout << "P(" << k << ") = " << to_string(evaluate(poly, k)) << '\n';
  return 0;
}

int compute_poset(const ComputeOptions& o) {
  const auto catalog = catalog_or_empty(o.catalog);
  const GeneratedGroup g = resolve_group(o.group, catalog);
  auto poset = poset_for(o, g, catalog);
  if (o.out.empty()) {
    dump_poset(std::cout, poset);
  } else {
    std::ofstream out(o.out);
    if (!out) throw Error("cannot write " + o.out);
    dump_poset(out, poset);
    std::cout << poset.size() << " cosets written to " << o.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset posets of finite groups: homology, Hall polynomials and verification suites"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  cfg.catalog_path = COSETS_DEFAULT_CATALOG;
  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites over the catalog");
  verify->add_option("--suite", suites, "reciprocity, homology, join, altgen, a7, identities or all (repeatable)");
  verify->add_option("--catalog", cfg.catalog_path, "Group catalog")->capture_default_str();
  verify->add_option("--max-order", cfg.max_order, "Largest group in the homology sweep")->capture_default_str();
  verify->add_option("--reciprocity-max-order", cfg.reciprocity_max_order, "Largest group in the reciprocity check")->capture_default_str();
  verify->add_option("--lattice-bound", cfg.lattice_bound, "Largest group whose subgroup lattice is enumerated")->capture_default_str();
  verify->add_option("--prime", cfg.prime, "Field characteristic for homology")->capture_default_str();
  verify->add_flag("--slow", cfg.slow, "Include the A10 sweep");
  verify->add_option("--out", cfg.out_path, "Write the JSON report here");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)")->capture_default_str();
  verify->add_flag("--deterministic", cfg.deterministic, "Zero timings and the timestamp");

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "Ad-hoc computations for one group");
  compute->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", co.group, "Catalog name, or generators such as 5:(1,2,3,4,5),(1,2)")->required();
    sub->add_option("--catalog", co.catalog, "Group catalog")->capture_default_str();
    sub->add_option("--lattice-bound", co.lattice_bound, "Largest group whose subgroup lattice is enumerated")->capture_default_str();
    sub->add_flag("--json", co.as_json, "Print JSON");
  };
  auto* hom = compute->add_subcommand("homology", "Reduced Betti numbers of the order complex of C(G) or C(G,N)");
  add_common(hom);
  hom->add_option("--prime", co.prime, "Field characteristic")->capture_default_str();
  hom->add_option("--normal", co.relative, "Generators of N for C(G,N)");
  auto* zeta = compute->add_subcommand("zeta", "Hall polynomial and its values");
  add_common(zeta);
  auto* pos = compute->add_subcommand("poset", "Coset poset: vertices, then cover relations");
  add_common(pos);
  pos->add_option("--normal", co.relative, "Generators of N for C(G,N)");
  pos->add_option("--out", co.out, "Write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      for (const auto& s : suites) {
        if (s == "all") {
          cfg.suites.clear();
          break;
        }
        cfg.suites.push_back(parse_suite(s));
      }
      auto rep = run_suite(cfg);
      std::cout << rep.summary();
      if (!cfg.out_path.empty()) std::cout << "report: " << cfg.out_path << '\n';
      return rep.passed() ? 0 : 1;
    }
    if (*hom) return compute_homology(co);
    if (*zeta) return compute_zeta(co);
    if (*pos) return compute_poset(co);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
