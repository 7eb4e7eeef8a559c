#pragma once

#include <utility>
#include <vector>

#include "hnum/rat_poly.hpp"

namespace hnum {

struct FactorPower {
    RatPoly factor;  ///< integer-primitive, positive leading coefficient, irreducible over Q
    int multiplicity = 0;
};

/// Yun's algorithm: p / content = prod a_i^i with the a_i squarefree and pairwise coprime.
/// Returned parts are integer-primitive; empty parts are skipped.
std::vector<FactorPower> squarefree_decomposition(const RatPoly& p);

/// Irreducible factors of a squarefree primitive integer polynomial (Zassenhaus:
/// modular factorization, Hensel lifting, exhaustive recombination).
std::vector<RatPoly> factor_squarefree_integer(const RatPoly& f);

/// Full factorization over Q, sorted by the RatPoly ordering. Throws std::domain_error on zero.
std::vector<FactorPower> squarefree_factor_q(const RatPoly& p);

/// The q-th cyclotomic polynomial.
RatPoly cyclotomic(unsigned q);

/// q with primitive_part(f) == Phi_q, or 0 when f is not cyclotomic.
unsigned cyclotomic_index(const RatPoly& f);

/// Euler's totient.
unsigned euler_phi(unsigned q);

}  // namespace hnum
