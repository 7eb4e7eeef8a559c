#pragma once

#include <optional>
#include <vector>

#include "hnum/rat_matrix.hpp"
#include "hnum/rat_poly.hpp"
#include "hnum/roots.hpp"

namespace hnum {

/// K = Q[x]/(f) for an irreducible f, with the involution x -> 1/x. On a root of f lying
/// on the unit circle the involution is complex conjugation.
class NumberField {
public:
    using Elem = RatPoly;  ///< always reduced modulo f

    explicit NumberField(RatPoly modulus);

    const RatPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    Elem reduce(const RatPoly& p) const { return p.degree() < degree() ? p : p % monic_; }
    Elem generator() const { return reduce(RatPoly{0, 1}); }
    Elem constant(const Rational& c) const { return RatPoly::constant(c); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, int e) const;
    Elem conj(const Elem& a) const;
    /// x - 1/x, which evaluates to 2i sin(theta) at e^{i theta}.
    Elem omega() const;

    BigComplex eval(const Elem& a, const BigComplex& z) const;
    /// Sign of the real number a(root) for a fixed by the involution; nullopt when the
    /// enclosure does not exclude zero at the root's precision.
    std::optional<int> certified_sign(const Elem& a, const CertifiedRoot& root) const;

private:
    RatPoly modulus_;
    RatPoly monic_;
    RatPoly inv_x_;
    std::vector<Elem> conj_basis_;  ///< x^{-i} for i < degree
};

/// Dense matrix over a NumberField (row-major).
struct FieldMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<RatPoly> data;

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static FieldMatrix from_rational(const RatMatrix& m);

    RatPoly& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const RatPoly& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

FieldMatrix multiply(const NumberField& K, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix conj_transpose(const NumberField& K, const FieldMatrix& a);
/// Columns spanning the right kernel.
FieldMatrix kernel(const NumberField& K, const FieldMatrix& a);
/// Column rank.
std::size_t rank(const NumberField& K, const FieldMatrix& a);
/// Horizontal concatenation (column lists).
FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);
/// Columns of `candidates` extending span(base) one at a time while they stay independent.
FieldMatrix extend_basis(const NumberField& K, const FieldMatrix& base, const FieldMatrix& candidates);

/// Diagonal entries of a congruent diagonal form P^H G P for a hermitian G (G^H = G).
/// Throws std::logic_error when G is not hermitian.
std::vector<RatPoly> hermitian_diagonal(const NumberField& K, FieldMatrix g);

}  // namespace hnum
