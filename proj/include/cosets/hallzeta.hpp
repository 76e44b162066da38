#pragma once

// Hall's Dirichlet polynomial P_G(s) = sum_H mu(H, G) [G:H]^-s, its exact
// values at integers, and the brute-force generation oracle.

#include <cstdint>
#include <map>
#include <string>

#include "cosets/exact.hpp"
#include "cosets/lattice.hpp"
#include "cosets/poset.hpp"

namespace cosets {

/// sum_n a_n n^-s; zero coefficients are not stored.
struct DirichletPolynomial {
  std::map<std::uint64_t, long long> coefficients;

  long long coefficient(std::uint64_t n) const;
  /// "1:1 2:-1 3:-3 6:3"
  std::string to_string() const;
  friend bool operator==(const DirichletPolynomial&, const DirichletPolynomial&) = default;
};

/// Throws PreconditionError for an incomplete lattice, MismatchError if the
/// lattice or table belongs to another group.
DirichletPolynomial hall_polynomial(const GeneratedGroup& g, const SubgroupLattice& lattice, const MoebiusTable& mu);

/// sum_n a_n n^-k, exactly; k may be negative.
ExactRational evaluate(const DirichletPolynomial& poly, int k);

inline constexpr std::uint64_t kTupleBudget = 10'000'000;

/// Generating k-tuples / |G|^k by running over all tuples.  The last
/// coordinate runs over right cosets Hb of H = <first k-1 entries>, since
/// <H, hb> = <H, b>; each coset is decided by one BSGS order computation.
/// Throws BudgetError if |G|^k exceeds the budget.
ExactRational brute_force_generation_probability(const GeneratedGroup& g, unsigned k, std::uint64_t budget = kTupleBudget,
                                                 unsigned workers = 0);

/// mu(0^, 1^) of the poset with a new bottom and top adjoined.
/// Throws Error on overflow.
long long poset_moebius_hat(const FinitePoset& poset);

}  // namespace cosets
