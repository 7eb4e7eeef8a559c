#include "hnum/rat_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hnum {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const Rational& root) { return RatPoly(std::vector<Rational>{-root, 1}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {RatPoly(), *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
    const Rational& lead = divisor.leading();
    const int dd = divisor.degree();
    for (int i = degree(); i >= dd; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Rational q = top / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

bool RatPoly::divides(const RatPoly& other) const {
    if (is_zero()) return other.is_zero();
    return (other % *this).is_zero();
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly result = RatPoly::constant(1);
    RatPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

RatPoly RatPoly::reciprocal() const {
    std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
    return RatPoly(std::move(r));
}

int RatPoly::self_reciprocal_sign() const {
    if (is_zero()) return 0;
    if (coeffs_.front() == 0) return 0;
    RatPoly r = reciprocal();
    if (r == *this) return 1;
    if (r == -*this) return -1;
    return 0;
}

int RatPoly::trailing_zero_count() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
    return is_zero() ? 0 : k;
}

RatPoly RatPoly::strip_t_power() const {
    int k = trailing_zero_count();
    return RatPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Rational RatPoly::content() const {
    if (is_zero()) return 1;
    Integer g = 0;
    Integer l = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (leading() < 0) r = -r;
    return r;
}

RatPoly RatPoly::primitive_part() const {
    if (is_zero()) return {};
    return *this * Rational(1 / content());
}

std::vector<Integer> RatPoly::integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) throw std::domain_error("polynomial has non-integral coefficients");
        out.push_back(c.get_num());
    }
    return out;
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigComplex RatPoly::eval(const BigComplex& x) const {
    Precision prec = x.precision();
    BigComplex acc(prec);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc.re += BigFloat(*it, prec);
    }
    return acc;
}

int RatPoly::multiplicity_of(const RatPoly& factor) const {
    if (factor.degree() < 1) throw std::domain_error("multiplicity of a constant factor is undefined");
    if (is_zero()) return -1;
    int m = 0;
    RatPoly cur = *this;
    while (true) {
        auto [q, r] = cur.divmod(factor);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++m;
    }
    return m;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0 || c != 1) os << hnum::to_string(c);
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {RatPoly(), RatPoly(), RatPoly()};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

LaurentPoly LaurentPoly::normalize(const RatPoly& p) {
    if (p.is_zero()) return {};
    int k = p.trailing_zero_count();
    return {p.strip_t_power().primitive_part(), k};
}

}  // namespace hnum
