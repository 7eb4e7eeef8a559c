#include "hnum/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace hnum {

namespace {

mpfr_prec_t to_mpfr(Precision p) { return static_cast<mpfr_prec_t>(std::max(p.bits, 16u)); }

mpfr_prec_t widest(const BigFloat& a, const BigFloat& b) {
    return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

// Raises the precision of `x` to at least `prec` without losing its value.
void widen(mpfr_ptr x, mpfr_prec_t prec) {
    if (mpfr_get_prec(x) < prec) mpfr_prec_round(x, prec, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
    mpfr_init2(value_, to_mpfr(prec));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
    mpfr_init2(value_, to_mpfr(prec));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision prec) {
    mpfr_init2(value_, to_mpfr(prec));
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, Precision prec) {
    mpfr_init2(value_, to_mpfr(prec));
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, Precision prec) {
    mpfr_init2(value_, to_mpfr(prec));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Precision BigFloat::precision() const { return Precision{static_cast<unsigned>(mpfr_get_prec(value_))}; }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    widen(value_, widest(*this, rhs));
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    widen(value_, widest(*this, rhs));
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    widen(value_, widest(*this, rhs));
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    widen(value_, widest(*this, rhs));
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

std::string BigFloat::to_string(int digits) const {
    if (digits < 1) digits = 1;
    char* raw = nullptr;
    if (mpfr_asprintf(&raw, "%.*Re", digits - 1, value_) < 0 || raw == nullptr)
        throw std::runtime_error("BigFloat formatting failed");
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

mpq_class BigFloat::to_rational() const {
    if (!is_finite()) throw std::domain_error("non-finite BigFloat has no rational value");
    if (is_zero()) return 0;
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
    mpq_class q(mant);
    if (e >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return q;
}

long BigFloat::exponent() const {
    if (is_zero()) return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(value_));
}

BigFloat BigFloat::pi(Precision prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long exp, Precision prec) {
    BigFloat r(1L, prec);
    mpfr_mul_2si(r.value_, r.value_, exp, MPFR_RNDN);
    return r;
}

BigFloat abs(BigFloat x) {
    mpfr_abs(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat sqrt(BigFloat x) {
    mpfr_sqrt(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat cos(BigFloat x) {
    mpfr_cos(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat sin(BigFloat x) {
    mpfr_sin(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat log(BigFloat x) {
    mpfr_log(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat exp(BigFloat x) {
    mpfr_exp(x.value_, x.value_, MPFR_RNDN);
    return x;
}

BigFloat floor(BigFloat x) {
    mpfr_floor(x.value_, x.value_);
    return x;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(Precision{static_cast<unsigned>(widest(y, x))});
    mpfr_atan2(r.value_, y.value_, x.value_, MPFR_RNDN);
    return r;
}

Precision BigComplex::precision() const { return std::max(re.precision(), im.precision()); }

BigComplex BigComplex::unit(const mpq_class& turns, Precision prec) {
    Precision work{prec.bits + 32};
    BigFloat angle = BigFloat::pi(work) * BigFloat(mpq_class(2 * turns), work);
    BigFloat c = cos(angle);
    BigFloat s = sin(angle);
    return {c, s};
}

BigComplex BigComplex::polar(const BigFloat& modulus, const BigFloat& angle) {
    return {modulus * cos(angle), modulus * sin(angle)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigFloat r = re * rhs.re - im * rhs.im;
    BigFloat i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    BigFloat d = rhs.norm();
    BigFloat r = (re * rhs.re + im * rhs.im) / d;
    BigFloat i = (im * rhs.re - re * rhs.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

BigFloat BigComplex::abs() const { return sqrt(norm()); }

BigFloat BigComplex::arg() const {
    BigFloat a = atan2(im, re);
    if (a.sign() < 0) a += BigFloat::pi(a.precision()) * BigFloat(2L, a.precision());
    return a;
}

bool approx_equal(const BigComplex& a, const BigComplex& b, const BigFloat& tol) { return (a - b).abs() <= tol; }

}  // namespace hnum
