#include "hnum/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "hnum/factor.hpp"
#include "hnum/number_field.hpp"

namespace hnum {

Rational reduce_turns(const Rational& turns) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    Rational r = turns - Rational(q);
    r.canonicalize();
    return r;
}

namespace {

using PolyMatrix = std::vector<std::vector<RatPoly>>;

struct BigSym {
    std::size_t n;
    std::vector<BigFloat> a;
    BigFloat& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

// Cyclic Jacobi eigenvalues of a real symmetric matrix.
std::vector<BigFloat> jacobi_eigenvalues(BigSym m, Precision prec) {
    const std::size_t n = m.n;
    const BigFloat eps = BigFloat::pow2(-static_cast<long>(prec.bits) + 16, prec);
    BigFloat scale(prec);
    for (const auto& v : m.a) scale = max(scale, abs(v));
    const BigFloat tiny = eps * eps * (scale + BigFloat(1L, prec));
    const BigFloat one(1L, prec), two(2L, prec);
    for (int sweep = 0; sweep < 200; ++sweep) {
        BigFloat off(prec);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = max(off, abs(m(i, j)));
        if (off <= eps * eps * (scale + one)) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (abs(m(p, q)) <= tiny) continue;
                BigFloat theta = (m(q, q) - m(p, p)) / (two * m(p, q));
                BigFloat t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                BigFloat c = one / sqrt(t * t + one);
                BigFloat s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    BigFloat mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    BigFloat mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
    }
    std::vector<BigFloat> ev;
    for (std::size_t i = 0; i < n; ++i) ev.push_back(m(i, i));
    return ev;
}

int exact_nullity(const std::vector<RatPoly>& factors, const Rational& turns) {
    const unsigned b = static_cast<unsigned>(turns.get_den().get_ui());
    const RatPoly phi = cyclotomic(b);
    int nullity = 0;
    for (const auto& d : factors)
        if (d.is_zero() || phi.divides(d)) ++nullity;
    return nullity;
}

SignatureSample direct_exact(const RatMatrix& S, const Rational& turns, unsigned b, Precision prec) {
    const std::size_t n = S.rows();
    const NumberField K(cyclotomic(b));
    const RatPoly x = K.generator();
    const RatPoly one = K.constant(1);
    const RatPoly c1 = K.sub(one, x);
    const RatPoly c2 = K.sub(one, K.conj(x));
    FieldMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M(i, j) = K.add(K.mul(c1, K.constant(S(i, j))), K.mul(c2, K.constant(S(j, i))));
    std::vector<RatPoly> diag = hermitian_diagonal(K, M);
    CertifiedRoot z;
    z.value = BigComplex::unit(turns, prec);
    z.radius = BigFloat::pow2(-static_cast<long>(prec.bits) + 4, prec);
    z.status = UnitCircleStatus::on;
    z.factor = K.modulus();
    SignatureSample out{turns, 0, 0, -1};
    for (const auto& d : diag) {
        if (d.is_zero()) {
            ++out.nullity;
            continue;
        }
        auto sg = K.certified_sign(d, z);
        if (!sg) throw PrecisionError("signature pivot sign not certified", prec);
        out.sigma += *sg;
    }
    return out;
}

SignatureSample direct_numeric(const RatMatrix& S, const Rational& turns, Precision prec,
                               const std::vector<RatPoly>& factors) {
    const std::size_t n = S.rows();
    const BigFloat angle = BigFloat::pi(prec) * BigFloat(2L, prec) * BigFloat(turns, prec);
    const BigFloat cs = cos(angle), sn = sin(angle);
    const BigFloat re_coef = BigFloat(1L, prec) - cs;
    // (1 - zeta) S + (1 - conj zeta) S^T = A + iB, A = (1-cos)(S+S^T), B = sin (S^T - S).
    BigSym E{2 * n, std::vector<BigFloat>(4 * n * n, BigFloat(prec))};
    BigFloat norm(prec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat a = re_coef * BigFloat(S(i, j) + S(j, i), prec);
            BigFloat bb = sn * BigFloat(S(j, i) - S(i, j), prec);
            E(i, j) = a;
            E(n + i, n + j) = a;
            E(i, n + j) = -bb;
            E(n + i, j) = bb;
            norm = max(norm, abs(a) + abs(bb));
        }
    const int nullity = exact_nullity(factors, turns);
    std::vector<BigFloat> ev = jacobi_eigenvalues(E, prec);
    std::sort(ev.begin(), ev.end(), [](const BigFloat& a, const BigFloat& b) { return abs(a) < abs(b); });
    const BigFloat margin = BigFloat::pow2(-static_cast<long>(prec.bits) / 2, prec) *
                            (norm * BigFloat(static_cast<long>(2 * n), prec) + BigFloat(1L, prec));
    const auto zeros = static_cast<std::size_t>(2 * nullity);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const bool small = abs(ev[i]) <= margin;
        if ((i < zeros) != small) throw PrecisionError("signature eigenvalues too close to zero", prec);
    }
    int pos = 0, neg = 0;
    for (std::size_t i = zeros; i < ev.size(); ++i) (ev[i].sign() > 0 ? pos : neg) += 1;
    if (pos % 2 || neg % 2) throw PrecisionError("real embedding inertia is not doubled", prec);
    return {turns, (pos - neg) / 2, nullity, -1};
}

// Sign of (turns of lambda) - t, with lambda = 1 at turns 0.
std::optional<int> compare_turns(const EigenInfo& info, const Rational& t) {
    if (info.turns) {
        if (*info.turns == t) return 0;
        return *info.turns < t ? -1 : 1;
    }
    const Precision prec = info.value.precision();
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    BigFloat d = info.value.arg() / two_pi - BigFloat(t, prec);
    BigFloat err = info.radius * BigFloat(4L, prec) / info.value.abs() + BigFloat::pow2(-static_cast<long>(prec.bits) + 10, prec);
    if (abs(d) <= err) return std::nullopt;
    return d.sign();
}

}  // namespace

SignatureSample tristram_levine_direct(const RatMatrix& S, const Rational& turns_in, Precision prec,
                                       const std::vector<RatPoly>* invariant_factors) {
    if (!S.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    const Rational turns = reduce_turns(turns_in);
    if (turns == 0) throw std::domain_error("Tristram-Levine signature is undefined at zeta = 1");
    if (S.rows() == 0) return {turns, 0, 0, -1};
    if (!turns.get_den().fits_uint_p()) throw std::invalid_argument("zeta denominator too large");
    const unsigned b = static_cast<unsigned>(turns.get_den().get_ui());
    if (euler_phi(b) <= kExactCyclotomicDegree) return direct_exact(S, turns, b, prec);
    if (invariant_factors) return direct_numeric(S, turns, prec, *invariant_factors);
    return direct_numeric(S, turns, prec, alexander_invariant_factors(S));
}

SignatureSample tristram_levine_from_h(const HNumbers& hn, const Rational& turns_in) {
    const Rational t = reduce_turns(turns_in);
    if (t == 0) throw std::domain_error("Tristram-Levine signature is undefined at zeta = 1");
    const Rational tbar = reduce_turns(-t);
    SignatureSample out{t, 0, static_cast<int>(hn.s0_dim), 0};
    for (const auto& [key, c] : hn.p) {
        const EigenInfo& info = hn.eigen.at(key.key);
        auto rel = compare_turns(info, t);
        if (!rel) throw PrecisionError("eigenvalue argument not separated from zeta", info.value.precision());
        if (key.k % 2 == 1) {
            if (*rel < 0) out.sigma -= key.u * c;
            if (*rel > 0) out.sigma += key.u * c;
        } else if (*rel == 0) {
            out.sigma += key.u * c;
        }
        if (info.turns && *info.turns == tbar) out.nullity_ndeg += c;
    }
    out.nullity += out.nullity_ndeg;
    return out;
}

std::optional<SpectralSignature> tristram_levine_from_spectrum(const SpectrumData& sd, const Rational& turns) {
    const Rational t = reduce_turns(turns);
    if (t == 0) return std::nullopt;
    HalfplaneCount hc = halfplane_count(sd, t);
    if (hc.boundary) return std::nullopt;
    SpectralSignature s;
    s.from_sp = -(hc.inside - hc.isp_inside) + (hc.outside - hc.isp_outside);
    s.from_esp = -hc.inside + hc.outside;
    return s;
}

std::vector<RatPoly> alexander_invariant_factors(const RatMatrix& S) {
    if (!S.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    const std::size_t n = S.rows();
    PolyMatrix A(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c{S(i, j), -S(j, i)};
            A[i][j] = RatPoly(c);
        }
    std::vector<RatPoly> factors;
    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = s; i < n; ++i)
                for (std::size_t j = s; j < n; ++j)
                    if (!A[i][j].is_zero() && (pi == n || A[i][j].degree() < A[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) {
                while (factors.size() < n) factors.emplace_back();
                return factors;
            }
            std::swap(A[s], A[pi]);
            for (auto& row : A) std::swap(row[s], row[pj]);
            bool clean = true;
            for (std::size_t i = s + 1; i < n; ++i) {
                if (A[i][s].is_zero()) continue;
                RatPoly q = A[i][s] / A[s][s];
                for (std::size_t j = s; j < n; ++j) A[i][j] -= q * A[s][j];
                if (!A[i][s].is_zero()) clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (A[s][j].is_zero()) continue;
                RatPoly q = A[s][j] / A[s][s];
                for (std::size_t i = s; i < n; ++i) A[i][j] -= q * A[i][s];
                if (!A[s][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the rest; otherwise fold an offending row in and retry.
            std::size_t bad = n;
            for (std::size_t i = s + 1; i < n && bad == n; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (!A[s][s].divides(A[i][j])) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = s; j < n; ++j) A[s][j] += A[bad][j];
        }
        factors.push_back(A[s][s].monic());
    }
    return factors;
}

LaurentPoly AlexanderTower::delta(int n) const {
    if (n < static_cast<int>(polys.size())) return polys[static_cast<std::size_t>(n)];
    return LaurentPoly::normalize(RatPoly{1});
}

int AlexanderTower::order(int n, const RatPoly& f) const {
    LaurentPoly d = delta(n);
    if (d.is_zero()) return -1;
    return d.poly.multiplicity_of(f);
}

AlexanderTower alexander_tower(const RatMatrix& S) {
    AlexanderTower tw;
    tw.invariant_factors = alexander_invariant_factors(S);
    const std::size_t n = tw.invariant_factors.size();
    for (const auto& d : tw.invariant_factors)
        if (d.is_zero()) ++tw.m0;
    for (std::size_t k = 0; k <= n; ++k) {
        RatPoly prod{1};
        for (std::size_t i = 0; i + k < n; ++i) prod = prod * tw.invariant_factors[i];
        tw.polys.push_back(LaurentPoly::normalize(prod));
        if (tw.polys.back().is_one()) break;
    }
    return tw;
}

std::vector<int> alexander_multiplicities_from_jordan(const std::vector<JordanClass>& jordan, const EigenKey& mu) {
    const JordanClass* jc = find_class(jordan, mu);
    if (!jc) return {0};
    std::vector<int> theta = jc->part.theta();
    const std::size_t r = theta.size();
    std::vector<int> I;
    for (std::size_t n = 0; n <= r; ++n) {
        int sum = 0;
        for (std::size_t i = 0; i + n < r; ++i) sum += theta[i];
        I.push_back(sum);
    }
    return I;
}

NakanishiIndex nakanishi_from_tower(const AlexanderTower& tower) { return {tower.first_one(), std::nullopt}; }

NakanishiIndex nakanishi_from_jordan(const std::vector<JordanClass>& jordan, std::size_t s0_dim) {
    NakanishiIndex ni{static_cast<int>(s0_dim), std::nullopt};
    int best = 0;
    for (const auto& jc : jordan) {
        const int r = jc.part.block_count();
        if (r > best) {
            best = r;
            ni.witness = jc.cls.key;
        }
    }
    ni.value += best;
    return ni;
}

}  // namespace hnum
