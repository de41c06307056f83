// Machine verification suites: every lemma and theorem checked at desk scale
// against independent routes (kernel computations, exhaustive enumeration,
// token rewriting). Report entries are keyed by stable anchor strings so a
// failure points at one statement.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfcode/hopf.hpp"
#include "hopfcode/random.hpp"
#include "hopfcode/verify_fwd.hpp"

namespace hopfcode {

struct VerifyOptions {
  unsigned samples = 100;
  std::uint64_t seed = 0x5eed;
  std::uint64_t budget = default_enumeration_budget();
};

// ---- independent oracles ----

// Token-rewriting evaluator for basis products of the omega algebra:
// applies the defining relations (idempotent collision, commutation past x,
// nilpotency) to normal form, independently of the structure constants.
AlgebraElement rewrite_basis_product(const OmegaAlgebra& alg, unsigned s1,
                                     unsigned m1, unsigned s2, unsigned m2);

// Exhaustive search for a right-module isomorphism between two submodules
// of equal dimension k: all p^(k*k) matrices (BudgetExceeded past budget).
bool right_modules_isomorphic(const RightSubmodule& m,
                              const RightSubmodule& n, std::uint64_t budget);

// A pair with <x, y> = 0 but <y, x> != 0, searched over two-term
// combinations of basis vectors; nullopt when none exists there.
std::optional<std::pair<AlgebraElement, AlgebraElement>>
find_asymmetric_orthogonality_witness(const BilinearForm& form,
                                      const StructureAlgebra& alg);

// ---- reusable lemma suites (append entries to a report) ----

void suite_subspace_lattice(const BilinearForm& form, DeterministicRng& rng,
                            unsigned samples, VerifyReport& report);
void suite_monomial_certificate(const BilinearForm& form,
                                VerifyReport& report);
void suite_action_transport(const BilinearForm& form,
                            const StructureAlgebra& alg,
                            DeterministicRng& rng, unsigned samples,
                            VerifyReport& report);
void suite_hopf_form_lemmas(const HopfStructure& hopf, DeterministicRng& rng,
                            unsigned samples, VerifyReport& report);
void suite_annihilator_inclusion(const HopfStructure& hopf,
                                 const std::vector<RightSubmodule>& ideals,
                                 VerifyReport& report);

// ---- classification and orthogonal-theorem checks ----

// Enumeration vs the deduped scaled-ideal family (exact set equality of
// canonical bases); degrades to family-side checks past the budget.
VerifyEntry verify_classification(const OmegaAlgebra& alg,
                                  std::uint64_t budget);

// No two representatives N_{s,t} are isomorphic: dimension/annihilator
// signatures, with exhaustive isomorphism search on ties (budget-gated).
VerifyEntry verify_representative_irredundancy(const OmegaAlgebra& alg,
                                               std::uint64_t budget);

// Predicted orthogonals equal kernel-computed orthogonals for every (s, m),
// including the left-orthogonal identification.
VerifyEntry verify_orthogonal_closed_form(const OmegaAlgebra& alg,
                                          const CanonicalFormSpec& form_spec);

// Random canonical form with reversal nu (random mu, random nonzero d).
CanonicalFormSpec random_canonical_form(DeterministicRng& rng,
                                        const OmegaSpec& spec);

// Random element of R with invertible constant term.
AlgebraElement random_invertible_r(DeterministicRng& rng,
                                   const OmegaAlgebra& alg);

// ---- full per-algebra suites ----

VerifyReport verify_omega_suite(const OmegaAlgebra& alg,
                                const VerifyOptions& opts = {});
VerifyReport verify_taft_suite(const TaftAlgebra& taft,
                               const VerifyOptions& opts = {});
VerifyReport verify_cdmm_suite(const CdmmAlgebra& cdmm,
                               const VerifyOptions& opts = {});
VerifyReport verify_cyclic_suite(const CyclicAlgebra& cyclic,
                                 const VerifyOptions& opts = {});

}  // namespace hopfcode
