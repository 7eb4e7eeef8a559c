#include "hnum/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>

namespace hnum {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // coefficients mod a small prime, low degree first
using ZPoly = std::vector<Integer>;

// ---- arithmetic in F_p[t] -------------------------------------------------

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(ModPoly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    static int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

    ModPoly add(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        trim(r);
        return r;
    }
    std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
        if (b.empty()) throw std::domain_error("division by zero in F_p[t]");
        if (a.size() < b.size()) return {{}, a};
        u64 li = inv(b.back());
        const int db = deg(b);
        ModPoly q(a.size() - b.size() + 1, 0);
        for (int i = deg(a); i >= db; --i) {
            u64 c = mul(a[static_cast<std::size_t>(i)], li);
            if (c == 0) continue;
            const auto shift = static_cast<std::size_t>(i - db);
            q[shift] = c;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(ModPoly a) const {
        if (a.empty()) return a;
        u64 li = inv(a.back());
        for (auto& c : a) c = mul(c, li);
        return a;
    }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // Returns g = gcd (monic) with s*a + t*b = g.
    void xgcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t) const {
        ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 li = inv(r0.back());
        g = monic(r0);
        s = mul(s0, ModPoly{li});
        t = mul(t0, ModPoly{li});
    }
    ModPoly derivative(const ModPoly& a) const {
        if (a.size() <= 1) return {};
        ModPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
        ModPoly r{1};
        base = rem(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = rem(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
        }
        return r;
    }
};

ModPoly reduce_mod(const ZPoly& f, u64 p) {
    ModPoly r(f.size());
    Integer P(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c;
        mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), P.get_mpz_t());
        r[i] = c.get_ui();
    }
    Fp::trim(r);
    return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Fp& F, ModPoly f) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x{0, 1};
    ModPoly h = x;
    Integer P(static_cast<unsigned long>(F.p));
    for (int d = 1; 2 * d <= Fp::deg(f); ++d) {
        h = F.powmod(h, P, f);
        ModPoly g = F.gcd(F.sub(h, x), f);
        if (Fp::deg(g) > 0) {
            out.emplace_back(g, d);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (Fp::deg(f) > 0) out.emplace_back(F.monic(f), Fp::deg(f));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const Fp& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (Fp::deg(g) == d) {
        out.push_back(F.monic(g));
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, F.p - 1);
    while (true) {
        ModPoly a(static_cast<std::size_t>(Fp::deg(g)));
        for (auto& c : a) c = coef(rng);
        Fp::trim(a);
        if (Fp::deg(a) < 1) continue;
        ModPoly b = F.sub(F.powmod(a, e, g), ModPoly{1});
        ModPoly c = F.gcd(b, g);
        if (Fp::deg(c) > 0 && Fp::deg(c) < Fp::deg(g)) {
            equal_degree(F, c, d, rng, out);
            equal_degree(F, F.divmod(g, c).first, d, rng, out);
            return;
        }
    }
}

// ---- arithmetic in (Z / M)[t] ---------------------------------------------

Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = mod_pos(c, m);
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_pos((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), m);
    ztrim(r);
    return r;
}

ZPoly zscale(const ZPoly& a, const Integer& c, const Integer& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i] * c, m);
    ztrim(r);
    return r;
}

ZPoly lift_modpoly(const ModPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw std::domain_error("non-invertible modulus");
    return r;
}

// Lifts target = g * h (mod p) to mod p^a where g is monic.
// `target` is already reduced mod p^a; g and h come back lifted.
void hensel_pair(const Fp& F, const ZPoly& target, ZPoly& g, ZPoly& h, unsigned a) {
    const Integer P(static_cast<unsigned long>(F.p));
    ModPoly gm = reduce_mod(g, F.p), hm = reduce_mod(h, F.p), gg, s, t;
    F.xgcd(gm, hm, gg, s, t);
    Integer pk = P;
    for (unsigned k = 1; k < a; ++k) {
        Integer next = pk * P;
        ZPoly diff = zsub(target, zmul(g, h, next), next);
        ZPoly ez(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) ez[i] = diff[i] / pk;
        ModPoly e = reduce_mod(ez, F.p);
        auto [q, dg] = F.divmod(F.mul(e, t), gm);
        ModPoly dh = F.add(F.mul(e, s), F.mul(q, hm));
        ZPoly dgz = lift_modpoly(dg), dhz = lift_modpoly(dh);
        ZPoly ng(std::max(g.size(), dgz.size())), nh(std::max(h.size(), dhz.size()));
        for (std::size_t i = 0; i < ng.size(); ++i)
            ng[i] = mod_pos((i < g.size() ? g[i] : 0) + pk * (i < dgz.size() ? dgz[i] : 0), next);
        for (std::size_t i = 0; i < nh.size(); ++i)
            nh[i] = mod_pos((i < h.size() ? h[i] : 0) + pk * (i < dhz.size() ? dhz[i] : 0), next);
        ztrim(ng);
        ztrim(nh);
        g = std::move(ng);
        h = std::move(nh);
        pk = std::move(next);
    }
}

// target = lc * prod(u) mod p; returns the u lifted to monic factors mod p^a.
std::vector<ZPoly> hensel_multi(const Fp& F, const ZPoly& target, const std::vector<ModPoly>& u, unsigned a,
                                const Integer& M) {
    if (u.size() == 1) {
        Integer inv = inverse_mod(target.back(), M);
        return {zscale(target, inv, M)};
    }
    std::size_t half = u.size() / 2;
    std::vector<ModPoly> left(u.begin(), u.begin() + static_cast<long>(half));
    std::vector<ModPoly> right(u.begin() + static_cast<long>(half), u.end());
    const Fp& f = F;
    ModPoly gl{1}, hr{1};
    for (const auto& x : left) gl = f.mul(gl, x);
    for (const auto& x : right) hr = f.mul(hr, x);
    ModPoly lcm{static_cast<u64>(mod_pos(target.back(), Integer(static_cast<unsigned long>(F.p))).get_ui())};
    hr = f.mul(hr, lcm);
    ZPoly g = lift_modpoly(gl), h = lift_modpoly(hr);
    hensel_pair(F, target, g, h, a);
    auto lf = hensel_multi(F, g, left, a, M);
    auto rf = hensel_multi(F, h, right, a, M);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

ZPoly to_zpoly(const RatPoly& f) { return f.integer_coeffs(); }

RatPoly from_zpoly(const ZPoly& f) {
    std::vector<Rational> c(f.begin(), f.end());
    return RatPoly(std::move(c));
}

ZPoly symmetric(const ZPoly& f, const Integer& M) {
    Integer half = M / 2;
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] > half ? Integer(f[i] - M) : f[i];
    ztrim(r);
    return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<FactorPower> out;
    if (p.degree() == 0) return out;
    RatPoly f = p.monic();
    RatPoly a0 = gcd(f, f.derivative());
    RatPoly b = f / a0;
    RatPoly c = f.derivative() / a0;
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, d);
        if (a.is_zero()) a = b;
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.push_back({a.primitive_part(), i});
    }
    return out;
}

std::vector<RatPoly> factor_squarefree_integer(const RatPoly& input) {
    RatPoly f = input.primitive_part();
    if (f.degree() <= 1) return {f};
    std::vector<RatPoly> out;
    // Pull out t first; Zassenhaus below assumes nothing about it but this keeps things tidy.
    if (f.coeff(0) == 0) {
        out.push_back(RatPoly{0, 1});
        f = f.strip_t_power().primitive_part();
        if (f.degree() < 1) return out;
        if (f.degree() == 1) {
            out.push_back(f);
            return out;
        }
    }
    ZPoly fz = to_zpoly(f);
    const Integer lc = fz.back();

    // Choose among a few admissible primes the one with the fewest modular factors.
    std::mt19937_64 rng(0x5eed1234ULL);
    u64 best_p = 0;
    std::vector<ModPoly> best_factors;
    int admissible = 0;
    for (u64 p = 3; admissible < 6 && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Fp F{p};
        ModPoly fm = reduce_mod(fz, p);
        if (Fp::deg(fm) != f.degree()) continue;
        if (Fp::deg(F.gcd(fm, F.derivative(fm))) != 0) continue;
        ++admissible;
        std::vector<ModPoly> facs;
        for (auto& [g, d] : distinct_degree(F, F.monic(fm))) equal_degree(F, g, d, rng, facs);
        if (best_p == 0 || facs.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::runtime_error("no admissible prime for factorization");
    if (best_factors.size() == 1) {
        out.push_back(f);
        return out;
    }

    // Coefficient bound for factors (Mignotte-type, generous), times lc for the recombination scaling.
    Integer maxc = 0;
    for (const auto& c : fz) maxc = std::max(maxc, Integer(abs(c)));
    Integer bound = maxc * abs(lc) * static_cast<unsigned long>(f.degree() + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
    bound *= 2;
    const Integer P(static_cast<unsigned long>(best_p));
    unsigned a = 1;
    Integer M = P;
    while (M <= bound) {
        M *= P;
        ++a;
    }

    Fp F{best_p};
    ZPoly target(fz.size());
    for (std::size_t i = 0; i < fz.size(); ++i) target[i] = mod_pos(fz[i], M);
    std::vector<ZPoly> lifted = hensel_multi(F, target, best_factors, a, M);

    RatPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            Integer lcr = rest.leading().get_num();
            ZPoly g{mod_pos(lcr, M)};
            for (auto i : idx) g = zmul(g, lifted[i], M);
            RatPoly cand = from_zpoly(symmetric(g, M)).primitive_part();
            if (cand.degree() > 0 && cand.divides(rest)) {
                out.push_back(cand);
                rest = (rest / cand).primitive_part();
                std::vector<ZPoly> remaining;
                for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    remaining.push_back(lifted[i]);
                }
                lifted = std::move(remaining);
                found = true;
                break;
            }
        } while (next_combination(idx, lifted.size()));
        if (!found) ++s;
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

std::vector<FactorPower> squarefree_factor_q(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    std::map<RatPoly, int> acc;
    for (const auto& part : squarefree_decomposition(p))
        for (auto& g : factor_squarefree_integer(part.factor)) acc[g] += part.multiplicity;
    std::vector<FactorPower> out;
    for (auto& [g, m] : acc) out.push_back({g, m});
    return out;
}

unsigned euler_phi(unsigned q) {
    unsigned r = q;
    unsigned n = q;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        r -= r / d;
    }
    if (n > 1) r -= r / n;
    return r;
}

RatPoly cyclotomic(unsigned q) {
    if (q == 0) throw std::domain_error("cyclotomic index must be positive");
    RatPoly r = RatPoly::monomial(1, static_cast<int>(q)) - RatPoly::constant(1);
    for (unsigned d = 1; d < q; ++d)
        if (q % d == 0) r = r / cyclotomic(d);
    return r;
}

unsigned cyclotomic_index(const RatPoly& f) {
    if (f.degree() < 1) return 0;
    RatPoly g = f.primitive_part();
    const unsigned n = static_cast<unsigned>(g.degree());
    if (g.leading() != 1 || abs(g.coeff(0)) != 1) return 0;
    const unsigned limit = 2 * n * n + 2;
    for (unsigned q = 1; q <= limit; ++q)
        if (euler_phi(q) == n && cyclotomic(q) == g) return q;
    return 0;
}

}  // namespace hnum
