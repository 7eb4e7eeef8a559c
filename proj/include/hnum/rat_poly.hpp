#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hnum/bigfloat.hpp"
#include "hnum/rational.hpp"

namespace hnum {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, int degree);
    /// t - root
    static RatPoly linear_root(const Rational& root);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& c);
    RatPoly operator-() const;

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;
    /// Total order by degree, then coefficients from the top; used for stable keys.
    friend std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b);

    /// Euclidean division; throws std::domain_error on a zero divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
    RatPoly operator/(const RatPoly& divisor) const { return divmod(divisor).first; }
    RatPoly operator%(const RatPoly& divisor) const { return divmod(divisor).second; }
    bool divides(const RatPoly& other) const;

    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly pow(unsigned e) const;
    /// t^deg * p(1/t)
    RatPoly reciprocal() const;
    /// +1 if p = t^deg p(1/t), -1 if p = -t^deg p(1/t), 0 otherwise.
    int self_reciprocal_sign() const;
    /// Largest k with t^k | p (0 for the zero polynomial).
    int trailing_zero_count() const;
    /// p / t^k with k = trailing_zero_count().
    RatPoly strip_t_power() const;

    /// Positive rational c with p / c integral, primitive, positive leading coefficient.
    Rational content() const;
    RatPoly primitive_part() const;
    std::vector<Integer> integer_coeffs() const;  ///< requires integral coefficients

    Rational eval(const Rational& x) const;
    BigComplex eval(const BigComplex& x) const;
    /// Multiplicity of `factor` (nonconstant) in this polynomial; -1 encodes +infinity for zero.
    int multiplicity_of(const RatPoly& factor) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
/// s*a + t*b = g (g monic gcd)
struct ExtendedGcd {
    RatPoly g, s, t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Polynomial normalized up to units of Q[t, 1/t]: t-power divided out, integer primitive,
/// positive leading coefficient. The zero polynomial stays zero.
struct LaurentPoly {
    RatPoly poly;
    int shift = 0;  ///< power of t that was divided out

    static LaurentPoly normalize(const RatPoly& p);
    bool is_zero() const { return poly.is_zero(); }
    bool is_one() const { return poly.degree() == 0 && poly.leading() == 1; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.poly == b.poly; }
};

}  // namespace hnum
