#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace hnum {

/// Working precision in bits for every arbitrary-precision computation.
struct Precision {
    unsigned bits = 256;

    constexpr Precision doubled() const { return Precision{bits * 2}; }
    friend constexpr auto operator<=>(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{256};
inline constexpr Precision kPrecisionCeiling{8192};

/// RAII wrapper around an MPFR value with an explicit precision.
/// Binary operations produce a result at the larger of the operand precisions.
class BigFloat {
public:
    explicit BigFloat(Precision prec = kDefaultPrecision);
    BigFloat(long value, Precision prec);
    BigFloat(double value, Precision prec);
    BigFloat(const mpz_class& value, Precision prec);
    BigFloat(const mpq_class& value, Precision prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    Precision precision() const;
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific decimal representation with `digits` significant digits.
    std::string to_string(int digits) const;
    /// Exact binary value as a rational number (finite values only).
    mpq_class to_rational() const;
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent() const;

    static BigFloat pi(Precision prec);
    /// 2^exp at the given precision.
    static BigFloat pow2(long exp, Precision prec);

    friend BigFloat abs(BigFloat x);
    friend BigFloat sqrt(BigFloat x);
    friend BigFloat cos(BigFloat x);
    friend BigFloat sin(BigFloat x);
    friend BigFloat log(BigFloat x);
    friend BigFloat exp(BigFloat x);
    friend BigFloat floor(BigFloat x);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

private:
    mpfr_t value_;
};

/// Complex number over BigFloat components.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(Precision prec = kDefaultPrecision) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    Precision precision() const;

    static BigComplex from_rational(const mpq_class& q, Precision prec) { return {BigFloat(q, prec), BigFloat(prec)}; }
    /// exp(2*pi*i*turns)
    static BigComplex unit(const mpq_class& turns, Precision prec);
    static BigComplex polar(const BigFloat& modulus, const BigFloat& angle);

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);
    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

    BigComplex conj() const { return {re, -im}; }
    BigFloat norm() const;  ///< |z|^2
    BigFloat abs() const;
    /// Argument in [0, 2*pi).
    BigFloat arg() const;
};

/// |a - b| <= tol
bool approx_equal(const BigComplex& a, const BigComplex& b, const BigFloat& tol);

}  // namespace hnum
