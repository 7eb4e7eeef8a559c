#pragma once

#include <string_view>
#include <vector>

#include "hnum/bigfloat.hpp"
#include "hnum/rat_poly.hpp"

namespace hnum {

enum class UnitCircleStatus { on, inside, outside, undecided };

std::string_view to_string(UnitCircleStatus s);

/// A root enclosed in a disk D(value, radius) that contains exactly one root of `factor`.
struct CertifiedRoot {
    BigComplex value;
    BigFloat radius;
    int multiplicity = 1;
    UnitCircleStatus status = UnitCircleStatus::undecided;
    bool real = false;  ///< certified real root (imaginary part set to exactly zero)
    RatPoly factor;     ///< irreducible factor over Q
    int index = 0;      ///< position among the roots of `factor` in (argument, modulus) order
};

/// Roots of a squarefree polynomial with isolating disks. When isolation fails at the
/// given precision every returned root carries status `undecided`.
std::vector<CertifiedRoot> isolate_squarefree(const RatPoly& f, Precision prec);

/// All complex roots of p, grouped by irreducible factor (factors in RatPoly order,
/// roots by argument in [0, 2pi), then modulus). Throws std::domain_error for p = 0.
std::vector<CertifiedRoot> roots_certified(const RatPoly& p, Precision prec);

/// True when some root carries status `undecided`.
bool any_undecided(const std::vector<CertifiedRoot>& roots);

/// Upper bound on |g(w) - g(z)| for w in D(z, r).
BigFloat lipschitz_bound(const RatPoly& g, const BigComplex& z, const BigFloat& r);

}  // namespace hnum
