#pragma once

// Universal p-generation, the alternating-group cycle sweeps, the diagonal
// construction in L^t, and the factorial/binomial parity identity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosets/exact.hpp"
#include "cosets/group.hpp"
#include "cosets/lattice.hpp"

namespace cosets {

struct GenerationWitness {
  Permutation element;    // conjugator or cycle, depending on the check
  BigInt generated_order;  // order of the subgroup it produced
  std::string note;
};

struct GenerationReport {
  std::string subject;
  bool verdict = true;
  std::vector<GenerationWitness> witnesses;  // counterexamples when verdict is false
  std::uint64_t tests = 0;
  double millis = 0;
};

/// <K, Q> = G for every Sylow p-subgroup Q, sweeping the conjugacy orbit of
/// sylow(G, p) breadth first.  Stops at the first failure.
/// Throws PreconditionError if K is not a subgroup or p does not divide |G|,
/// BudgetError if the orbit exceeds the budget.
GenerationReport universally_p_generates(const GeneratedGroup& g, const GeneratedGroup& k, std::uint64_t p,
                                         std::uint64_t budget = 1'000'000);

/// Every maximal subgroup has index divisible by p or r.  The lattice is
/// either complete or SubgroupLattice::overgroups(G, sylow(G, p)).
/// Throws PreconditionError for any other partial family, MismatchError for a foreign one.
bool univ_gen_via_maximal_indices(const GeneratedGroup& g, std::uint64_t r, std::uint64_t p, const SubgroupLattice& lattice);

/// For odd n: <c, P> = A_n for every n-cycle c; for even n the same with
/// (n-1)-cycles.  P = sylow(A_n, 2) is fixed.  Witnesses are the distinct
/// proper subgroups <c, P>, each with the first cycle producing it.
/// Throws PreconditionError for n < 5.
GenerationReport check_alternating_claims(unsigned n, unsigned workers = 0);

/// Number of cycles check_alternating_claims(n) tests.
std::uint64_t alternating_claim_test_count(unsigned n);

/// universally_p_generates(L^t, K^diag, p).
GenerationReport check_diagonal_universal(const GeneratedGroup& l, const GeneratedGroup& k, std::uint64_t p, std::size_t t);

struct FixedPointFreeResult {
  std::optional<Permutation> witness;
  std::string reason;  // set when there is no witness
};

/// A fixed-point-free element of sylow(A_n, 2), if one exists.
FixedPointFreeResult sylow2_fixed_point_free_element(unsigned n);

struct ParityIdentity {
  BigInt value;  // n! / (d!^l l!)
  bool even = false;
  /// C(2d-1, d-1) * d == (2d-1) * 2 * C(2d-3, d-1); only checked when l >= 2.
  bool factor_identity = true;
};

/// Computes n!/(d!^l l!) and prod_{j=1..l} C(jd-1, d-1) separately and
/// throws Error if they differ.  Throws PreconditionError unless 1 < d < n and d | n.
ParityIdentity imprimitive_parity_identity(unsigned n, unsigned d);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace cosets
