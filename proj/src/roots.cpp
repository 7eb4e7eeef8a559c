#include "hnum/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hnum/factor.hpp"

namespace hnum {

namespace {

struct HornerResult {
    BigComplex value;
    BigComplex derivative;
};

HornerResult horner(const std::vector<BigFloat>& c, const BigComplex& z) {
    Precision prec = z.precision();
    BigComplex p(prec), dp(prec);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z;
        p.re += c[i];
    }
    return {p, dp};
}

// Sum |c_i| |z|^i, used to bound rounding error in a Horner evaluation.
BigFloat magnitude_sum(const std::vector<BigFloat>& c, const BigFloat& absz) {
    BigFloat acc(absz.precision());
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * absz + abs(c[i]);
    return acc;
}

std::vector<BigFloat> float_coeffs(const RatPoly& f, Precision prec) {
    std::vector<BigFloat> c;
    for (const auto& q : f.coeffs()) c.emplace_back(q, prec);
    return c;
}

BigComplex rescale(const BigComplex& z, Precision prec) {
    BigComplex r(prec);
    r.re += z.re;
    r.im += z.im;
    return r;
}

// Aberth-Ehrlich iteration on all roots simultaneously.
std::vector<BigComplex> aberth(const RatPoly& f, Precision prec, std::vector<BigComplex> z) {
    const auto c = float_coeffs(f, prec);
    const std::size_t d = z.size();
    const BigFloat tol = BigFloat::pow2(-static_cast<long>(prec.bits) + 12, prec);
    for (auto& x : z) x = rescale(x, prec);
    for (int iter = 0; iter < 400; ++iter) {
        BigFloat worst(prec);
        for (std::size_t j = 0; j < d; ++j) {
            auto [p, dp] = horner(c, z[j]);
            if (p.re.is_zero() && p.im.is_zero()) continue;
            if (dp.re.is_zero() && dp.im.is_zero()) dp.re = BigFloat(1L, prec);
            BigComplex w = p / dp;
            BigComplex s(prec);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == j) continue;
                BigComplex diff = z[j] - z[i];
                if (diff.re.is_zero() && diff.im.is_zero()) diff.re = tol;
                s += BigComplex(BigFloat(1L, prec), BigFloat(prec)) / diff;
            }
            BigComplex denom = BigComplex(BigFloat(1L, prec), BigFloat(prec)) - w * s;
            BigComplex step = (denom.re.is_zero() && denom.im.is_zero()) ? w : w / denom;
            z[j] -= step;
            BigFloat scale = max(BigFloat(1L, prec), z[j].abs());
            worst = max(worst, step.abs() / scale);
        }
        if (worst < tol) break;
    }
    return z;
}

std::vector<BigComplex> initial_guesses(const RatPoly& f, Precision prec) {
    const int d = f.degree();
    BigFloat radius(1L, prec);
    if (f.coeff(0) != 0) {
        BigFloat ratio = abs(BigFloat(Rational(f.coeff(0) / f.leading()), prec));
        radius = exp(log(ratio) / BigFloat(static_cast<long>(d), prec));
    }
    std::vector<BigComplex> z;
    for (int j = 0; j < d; ++j) {
        Rational turns(2 * j + 1, 2 * d);
        turns += Rational(1, 7 * d);
        BigComplex u = BigComplex::unit(turns, prec);
        z.push_back({u.re * radius, u.im * radius});
    }
    return z;
}

bool disks_meet(const BigComplex& a, const BigFloat& ra, const BigComplex& b, const BigFloat& rb) {
    return !((a - b).abs() > ra + rb);
}

CertifiedRoot rational_root(const RatPoly& f, Precision prec) {
    Rational r = -f.coeff(0) / f.coeff(1);
    CertifiedRoot out;
    out.value = BigComplex::from_rational(r, prec);
    out.radius = BigFloat(prec);
    out.real = true;
    Rational a = abs(r);
    out.status = a == 1 ? UnitCircleStatus::on : (a < 1 ? UnitCircleStatus::inside : UnitCircleStatus::outside);
    out.factor = f;
    return out;
}

// Orders roots by argument in [0, 2pi), then modulus; arguments closer than the
// disk radii are considered equal.
void order_roots(std::vector<CertifiedRoot>& roots) {
    std::vector<BigFloat> args, mods;
    for (const auto& r : roots) {
        args.push_back(r.value.arg());
        mods.push_back(r.value.abs());
    }
    std::vector<std::size_t> idx(roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        BigFloat slack = roots[a].radius + roots[b].radius + BigFloat::pow2(-static_cast<long>(args[a].precision().bits) / 2, args[a].precision());
        BigFloat diff = args[a] - args[b];
        if (abs(diff) > slack) return diff.sign() < 0;
        return mods[a] < mods[b];
    });
    std::vector<CertifiedRoot> sorted;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        sorted.push_back(roots[idx[k]]);
        sorted.back().index = static_cast<int>(k);
    }
    roots = std::move(sorted);
}

}  // namespace

std::string_view to_string(UnitCircleStatus s) {
    switch (s) {
        case UnitCircleStatus::on: return "on";
        case UnitCircleStatus::inside: return "inside";
        case UnitCircleStatus::outside: return "outside";
        case UnitCircleStatus::undecided: return "undecided";
    }
    return "undecided";
}

std::vector<CertifiedRoot> isolate_squarefree(const RatPoly& f, Precision prec) {
    if (f.degree() < 1) return {};
    if (f.degree() == 1) return {rational_root(f, prec)};
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const Precision work{prec.bits + 32};

    Precision coarse{std::min(128u, work.bits)};
    std::vector<BigComplex> z = aberth(f, coarse, initial_guesses(f, coarse));
    z = aberth(f, work, std::move(z));

    const auto c = float_coeffs(f, work);
    const BigFloat lead = abs(c.back());
    const BigFloat eps = BigFloat::pow2(-static_cast<long>(work.bits) + 8, work);
    std::vector<CertifiedRoot> roots(d);
    bool isolated = true;
    for (std::size_t j = 0; j < d; ++j) {
        auto [p, dp] = horner(c, z[j]);
        BigFloat slack = eps * magnitude_sum(c, z[j].abs()) * BigFloat(static_cast<long>(d + 1), work);
        BigFloat prod(1L, work);
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) prod *= (z[j] - z[i]).abs();
        auto& r = roots[j];
        r.value = z[j];
        r.factor = f;
        if (prod.is_zero()) {
            isolated = false;
            r.radius = BigFloat(1L, work);
            continue;
        }
        r.radius = BigFloat(static_cast<long>(d), work) * (p.abs() + slack) / (lead * prod);
        r.radius = r.radius + eps;
    }
    for (std::size_t i = 0; i < d && isolated; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (disks_meet(roots[i].value, roots[i].radius, roots[j].value, roots[j].radius)) {
                isolated = false;
                break;
            }
    if (!isolated) {
        for (auto& r : roots) r.status = UnitCircleStatus::undecided;
        return roots;
    }

    const bool reciprocal = f.self_reciprocal_sign() != 0;
    const BigFloat one(1L, work);
    for (std::size_t j = 0; j < d; ++j) {
        auto& r = roots[j];
        // Real-axis certification via the conjugate disk.
        if (!(abs(r.value.im) > r.radius)) {
            BigComplex mirror = r.value.conj();
            bool alone = true;
            for (std::size_t i = 0; i < d && alone; ++i)
                if (i != j && disks_meet(mirror, r.radius, roots[i].value, roots[i].radius)) alone = false;
            if (!alone) {
                r.status = UnitCircleStatus::undecided;
                continue;
            }
            r.real = true;
            r.value.im = BigFloat(work);
        }
        BigFloat modulus = r.value.abs();
        BigFloat e = abs(modulus - one);
        if (e > r.radius) {
            r.status = modulus < one ? UnitCircleStatus::inside : UnitCircleStatus::outside;
            continue;
        }
        if (!reciprocal) {
            r.status = UnitCircleStatus::undecided;
            continue;
        }
        BigFloat ep = e + r.radius;
        if (!(ep < BigFloat(0.5, work))) {
            r.status = UnitCircleStatus::undecided;
            continue;
        }
        BigFloat R = (BigFloat(2L, work) * ep + ep * ep) / (one - ep) + r.radius;
        bool alone = true;
        for (std::size_t i = 0; i < d && alone; ++i)
            if (i != j && disks_meet(r.value, R, roots[i].value, roots[i].radius)) alone = false;
        r.status = alone ? UnitCircleStatus::on : UnitCircleStatus::undecided;
    }
    order_roots(roots);
    return roots;
}

std::vector<CertifiedRoot> roots_certified(const RatPoly& p, Precision prec) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<CertifiedRoot> out;
    for (const auto& fp : squarefree_factor_q(p)) {
        for (auto& r : isolate_squarefree(fp.factor, prec)) {
            r.multiplicity = fp.multiplicity;
            out.push_back(std::move(r));
        }
    }
    return out;
}

bool any_undecided(const std::vector<CertifiedRoot>& roots) {
    return std::any_of(roots.begin(), roots.end(), [](const CertifiedRoot& r) { return r.status == UnitCircleStatus::undecided; });
}

BigFloat lipschitz_bound(const RatPoly& g, const BigComplex& z, const BigFloat& r) {
    Precision prec = z.precision();
    BigFloat reach = z.abs() + r;
    BigFloat acc(prec);
    for (int k = g.degree(); k >= 1; --k) acc = acc * reach + abs(BigFloat(Rational(g.coeff(k) * k), prec));
    return acc * r;
}

}  // namespace hnum
