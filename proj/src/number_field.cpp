#include "hnum/number_field.hpp"

#include <stdexcept>

namespace hnum {

NumberField::NumberField(RatPoly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
    if (modulus_.coeff(0) == 0 && modulus_.degree() > 0 && !(modulus_.degree() == 1))
        throw std::invalid_argument("number field modulus must not vanish at 0");
    monic_ = modulus_.monic();
    inv_x_ = modulus_.coeff(0) == 0 ? RatPoly() : inv(generator());
    Elem p = constant(1);
    for (int i = 0; i < degree(); ++i) {
        conj_basis_.push_back(p);
        if (!inv_x_.is_zero()) p = mul(p, inv_x_);
    }
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in number field");
    ExtendedGcd e = extended_gcd(a, monic_);
    if (e.g.degree() != 0) throw std::domain_error("number field modulus is reducible");
    return reduce(e.s);
}

NumberField::Elem NumberField::pow(const Elem& a, int e) const {
    Elem base = e < 0 ? inv(a) : a;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Elem r = constant(1);
    while (k) {
        if (k & 1u) r = mul(r, base);
        k >>= 1u;
        if (k) base = mul(base, base);
    }
    return r;
}

NumberField::Elem NumberField::conj(const Elem& a) const {
    if (a.degree() <= 0) return a;
    std::vector<Rational> acc(static_cast<std::size_t>(degree()));
    for (int i = 0; i <= a.degree(); ++i) {
        const Rational& c = a.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const auto& basis = conj_basis_[static_cast<std::size_t>(i)].coeffs();
        for (std::size_t j = 0; j < basis.size(); ++j) acc[j] += c * basis[j];
    }
    return RatPoly(std::move(acc));
}

NumberField::Elem NumberField::omega() const { return sub(generator(), inv_x_); }

BigComplex NumberField::eval(const Elem& a, const BigComplex& z) const { return a.eval(z); }

std::optional<int> NumberField::certified_sign(const Elem& a, const CertifiedRoot& root) const {
    if (a.is_zero()) return 0;
    if (a.degree() == 0) return a.coeff(0) > 0 ? 1 : -1;
    const BigComplex& z = root.value;
    Precision prec = z.precision();
    BigComplex v = a.eval(z);
    BigFloat reach = z.abs();
    BigFloat mag(prec);
    for (int i = a.degree(); i >= 0; --i) mag = mag * reach + abs(BigFloat(a.coeff(i), prec));
    BigFloat err = lipschitz_bound(a, z, root.radius) +
                   mag * BigFloat::pow2(-static_cast<long>(prec.bits) + 8, prec) * BigFloat(static_cast<long>(a.degree() + 2), prec);
    if (abs(v.re) > err) return v.re.sign() > 0 ? 1 : -1;
    return std::nullopt;
}

FieldMatrix FieldMatrix::from_rational(const RatMatrix& m) {
    FieldMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RatPoly::constant(m(i, j));
    return r;
}

FieldMatrix multiply(const NumberField& K, const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("field matrix product: shape mismatch");
    FieldMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            RatPoly acc;
            for (std::size_t k = 0; k < a.cols; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            r(i, j) = K.reduce(acc);
        }
    return r;
}

FieldMatrix conj_transpose(const NumberField& K, const FieldMatrix& a) {
    FieldMatrix r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r(j, i) = K.conj(a(i, j));
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(const NumberField& K, FieldMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m(p, col).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        RatPoly inv = K.inv(m(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) = K.mul(m(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            RatPoly f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                if (m(row, j).is_zero()) continue;
                m(i, j) = K.sub(m(i, j), K.mul(f, m(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FieldMatrix kernel(const NumberField& K, const FieldMatrix& a) {
    FieldMatrix m = a;
    auto pivots = rref_in_place(K, m);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    FieldMatrix k(a.cols, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = K.constant(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -m(i, free_cols[f]);
    }
    return k;
}

std::size_t rank(const NumberField& K, const FieldMatrix& a) {
    if (a.rows == 0 || a.cols == 0) return 0;
    FieldMatrix m = a;
    return rref_in_place(K, m).size();
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols == 0) return b;
    if (b.cols == 0) return a;
    if (a.rows != b.rows) throw std::invalid_argument("field hconcat: row mismatch");
    FieldMatrix r(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) r(i, a.cols + j) = b(i, j);
    }
    return r;
}

FieldMatrix extend_basis(const NumberField& K, const FieldMatrix& base, const FieldMatrix& candidates) {
    FieldMatrix span = base;
    std::size_t r = rank(K, span);
    FieldMatrix chosen(candidates.rows, 0);
    for (std::size_t j = 0; j < candidates.cols; ++j) {
        FieldMatrix col(candidates.rows, 1);
        for (std::size_t i = 0; i < candidates.rows; ++i) col(i, 0) = candidates(i, j);
        FieldMatrix trial = hconcat(span, col);
        std::size_t tr = rank(K, trial);
        if (tr > r) {
            span = std::move(trial);
            r = tr;
            chosen = hconcat(chosen, col);
        }
    }
    return chosen;
}

std::vector<RatPoly> hermitian_diagonal(const NumberField& K, FieldMatrix g) {
    const std::size_t n = g.rows;
    if (g.cols != n) throw std::invalid_argument("hermitian form must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j) != K.conj(g(j, i))) throw std::logic_error("form is not hermitian");

    const RatPoly w = K.omega();
    std::vector<RatPoly> diag;
    for (std::size_t s = 0; s < n; ++s) {
        // Bring a nonzero value to position (s, s).
        std::size_t p = s;
        while (p < n && g(p, p).is_zero()) ++p;
        if (p == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = s; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!g(i, j).is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                for (std::size_t i = s; i < n; ++i) diag.push_back(RatPoly());
                return diag;
            }
            // e_pi <- e_pi + c e_pj with c chosen so that the new diagonal entry is nonzero.
            RatPoly c = K.constant(1);
            RatPoly tr = K.add(g(pi, pj), K.conj(g(pi, pj)));
            if (tr.is_zero()) c = w;
            RatPoly cc = K.conj(c);
            for (std::size_t i = 0; i < n; ++i) g(i, pi) = K.add(g(i, pi), K.mul(c, g(i, pj)));
            for (std::size_t j = 0; j < n; ++j) g(pi, j) = K.add(g(pi, j), K.mul(cc, g(pj, j)));
            if (g(pi, pi).is_zero()) throw std::logic_error("hermitian pivot construction failed");
            p = pi;
        }
        if (p != s) {
            for (std::size_t j = 0; j < n; ++j) std::swap(g(p, j), g(s, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(g(i, p), g(i, s));
        }
        const RatPoly piv = g(s, s);
        const RatPoly pinv = K.inv(piv);
        for (std::size_t j = s + 1; j < n; ++j) {
            if (g(s, j).is_zero()) continue;
            RatPoly alpha = K.mul(g(s, j), pinv);
            RatPoly calpha = K.conj(alpha);
            for (std::size_t i = 0; i < n; ++i) g(i, j) = K.sub(g(i, j), K.mul(alpha, g(i, s)));
            for (std::size_t k = 0; k < n; ++k) g(j, k) = K.sub(g(j, k), K.mul(calpha, g(s, k)));
        }
        diag.push_back(piv);
    }
    return diag;
}

}  // namespace hnum
