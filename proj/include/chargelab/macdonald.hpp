#pragma once

// P_μ(X; q, 0) computed two ways, the Weyl character oracle, and the
// decomposition of a q-graded W-invariant polynomial into characters.

#include <vector>

#include "chargelab/poly.hpp"
#include "chargelab/weyl.hpp"

namespace chargelab {

// Σ over admissible (w,J) of q^level x^weight.
LaurentPoly ram_yip_t0(const LieType& type, const Weight& mu, int jobs = 1);
// Σ over τ ∈ B_μ of q^charge x^content.
LaurentPoly charge_formula_t0(const LieType& type, const Weight& mu, int jobs = 1);

// Character of V(λ) as the alternant ratio. λ must be weakly decreasing, and
// nonnegative in type C; in type A any last coordinate is allowed.
LaurentPoly weyl_character(const LieType& type, const Weight& lambda);

// Invariance under all simple reflections acting on the variables.
bool is_weyl_invariant(const LieType& type, const LaurentPoly& p);

struct CharacterTerm {
  Weight lambda;
  LaurentPoly multiplicity;  // polynomial in q only (no x)
};

// Writes p = Σ K_λ(q) χ(λ) by peeling off lex-leading dominant weights.
// Throws InternalError if p is not W-invariant.
std::vector<CharacterTerm> character_decomposition(const LieType& type, const LaurentPoly& p);

}  // namespace chargelab
