#pragma once

// The A7 configuration: a Sylow 2-subgroup P and a 7-cycle h both normalized
// by phi = conjugation by (1,2)(3,4)(5,6), the two classes of PGL(3,2)
// overgroups, the diagonal involution on A7^t, and the fixed-point scans
// for E = (P x K) x| <theta>.

#include <memory>
#include <string>
#include <vector>

#include "cosets/coset_poset.hpp"
#include "cosets/lattice.hpp"

namespace cosets {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PropertyReport {
  std::string subject;
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = {});
  bool passed() const;
};

struct A7Environment {
  GeneratedGroup a7, s7;
  GeneratedGroup p;         // Sylow 2-subgroup with P^phi = P
  Permutation seven_cycle;  // <h>^phi = <h>
  OvergroupAutomorphism phi;

  /// Searches the Sylow 2-subgroups of A7 and the 7-cycles in a fixed order
  /// for phi-invariant ones.  Throws Error if the search fails.
  static A7Environment build();
  GeneratedGroup k() const { return GeneratedGroup({seven_cycle}, 7); }
};

/// phi = conjugation by (1,2)(3,4)(5,6).
Permutation phi_conjugator();

/// All H with P <= H <= A7, P first and A7 last.
std::vector<GeneratedGroup> overgroups_of_sylow2(const A7Environment& env);

struct OvergroupCensus {
  std::vector<GeneratedGroup> overgroups;    // as overgroups_of_sylow2
  std::vector<GeneratedGroup> with_7_cycle;  // proper overgroups containing a 7-cycle
  std::vector<std::size_t> class_sizes;      // A7-classes of with_7_cycle members
  bool swapped_by_phi = false;
  bool conjugate_in_a7 = true;
  bool fingerprints_simple = false;          // nonabelian, every nontrivial normal closure is everything
};

OvergroupCensus overgroup_census(const A7Environment& env);

/// <Q^x : x in R> = K for Q in Syl_p(K), R in Syl_r(K).
bool sylow_conjugates_generate(const GeneratedGroup& k, std::uint64_t p, std::uint64_t r);
/// The (p, r) = (2, 7) case; throws PreconditionError unless |K| = 168.
bool check_pgl_strong_generation(const GeneratedGroup& k);

PropertyReport check_phi_properties(const A7Environment& env);

/// rho = conjugation by (x, ..., x) on A7^t inside S7^t, x = (1,2)(3,4)(5,6).
/// Throws BudgetError unless t is 1 or 2.
PropertyReport check_rho_on_power(const A7Environment& env, std::size_t t);

struct SmithActionSpec {
  GeneratedGroup g, n, p, k;
  OvergroupAutomorphism theta;
  ActionGroup e;

  /// Checks P, K <= N normal in G, theta normalizing G, N, P and K, and
  /// builds E from left translations by P, right translations by K and theta.
  static SmithActionSpec make(GeneratedGroup g, GeneratedGroup n, GeneratedGroup p, GeneratedGroup k, OvergroupAutomorphism theta);

  /// |E| = |P||K||theta|, the translations form a normal subgroup P x K,
  /// K cyclic, P a p-group, E/(P x K) of order 2.
  PropertyReport series_shape() const;
};

/// Action data for G = N = A7 and for G = S7, N = A7.
SmithActionSpec a7_smith_spec(const A7Environment& env);
SmithActionSpec s7_smith_spec(const A7Environment& env);

struct SmithResult {
  std::shared_ptr<const CosetPoset> poset;      // C(G, N) over the overgroups of P
  std::vector<std::uint32_t> translation_fixed;  // fixed by P x K
  std::vector<std::uint32_t> fixed;              // fixed by E
  bool criterion_agrees = false;                 // translation_fixed == translation_fixed_points(...)
};

SmithResult smith_fixed_point_check(const SmithActionSpec& spec);

/// N abelian minimal normal in G: C(G, N) is an antichain of size divisible
/// by |N| and its order complex has beta_{-1} + beta_0 > 0 over GF(2).
/// Throws PreconditionError if N is not abelian minimal normal.
PropertyReport abelian_antichain_check(const GeneratedGroup& g, const GeneratedGroup& n);

}  // namespace cosets
