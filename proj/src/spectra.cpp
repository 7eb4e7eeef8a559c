#include "hnum/spectra.hpp"

#include <algorithm>

namespace hnum {

SpecReal SpecReal::from_rational(const Rational& q, Precision prec) { return {q, BigFloat(q, prec)}; }

std::string SpecReal::to_string() const {
    if (exact) return hnum::to_string(*exact);
    return approx.to_string(64);
}

BigFloat boundary_tolerance() { return BigFloat::pow2(-64, Precision{128}); }

std::optional<int> compare(const SpecReal& a, const Rational& x) {
    if (a.exact) return cmp(*a.exact, x) < 0 ? -1 : (*a.exact == x ? 0 : 1);
    BigFloat d = a.approx - BigFloat(x, a.approx.precision());
    if (abs(d) <= boundary_tolerance()) return std::nullopt;
    return d.sign();
}

bool same_value(const SpecReal& a, const SpecReal& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    return abs(a.approx - b.approx) <= boundary_tolerance();
}

int SpectrumData::sp_size() const {
    int n = 0;
    for (const auto& e : sp) n += e.mult;
    return n;
}

int SpectrumData::isp_size() const {
    int n = 0;
    for (const auto& e : isp) n += e.mult;
    return n;
}

namespace {

// x in (0, 1] with lambda = e^{2 pi i x} on the circle.
SpecReal circle_turns(const EigenInfo& info) {
    const Precision prec = info.value.precision();
    if (info.turns) return SpecReal::from_rational(*info.turns == 0 ? Rational(1) : *info.turns, prec);
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    return {std::nullopt, info.value.arg() / two_pi};
}

SpecReal shifted(const SpecReal& s, long by) {
    SpecReal r = s;
    if (r.exact) *r.exact += by;
    r.approx = r.approx + BigFloat(by, r.approx.precision());
    return r;
}

// Real part x in (0, 1] for an eigenvalue strictly inside the disk.
SpecReal inner_turns(const EigenInfo& info) {
    const Precision prec = info.value.precision();
    if (info.real) return SpecReal::from_rational(info.value.re.sign() > 0 ? Rational(1) : Rational(1, 2), prec);
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    return {std::nullopt, info.value.arg() / two_pi};
}

}  // namespace

SpectrumData spectrum(const HNumbers& hn) {
    SpectrumData sd;
    // Per eigenvalue: multiplicity at the lift in (0,1] (v = +1, or v = -1 for lambda = 1) and the lift above it.
    std::map<EigenKey, std::pair<int, int>> lifts;
    for (const auto& [key, c] : hn.p) {
        const bool one = is_unit_one(key.key);
        auto& [lo, hi] = lifts[key.key];
        if (key.k % 2 == 0) {
            lo += c * key.k / 2;
            hi += c * key.k / 2;
            continue;
        }
        const int v_lo = one ? -1 : 1;
        lo += c * (key.k - key.u * v_lo) / 2;
        hi += c * (key.k + key.u * v_lo) / 2;
    }
    for (const auto& [key, m] : lifts) {
        const SpecReal x = circle_turns(hn.eigen.at(key));
        if (m.first) sd.sp.push_back({x, m.first, key});
        if (m.second) sd.sp.push_back({shifted(x, 1), m.second, key});
    }
    for (const auto& [key, c] : hn.q) {
        const EigenInfo& info = hn.eigen.at(key.key);
        const Precision prec = info.value.precision();
        const SpecReal x = inner_turns(info);
        BigFloat y = -log(info.value.abs()) / (BigFloat::pi(prec) * BigFloat(2L, prec));
        const int mult = key.k * c;
        sd.isp.push_back({x, y, mult, key.key});
        sd.isp.push_back({shifted(x, 1), -y, mult, key.key});
    }
    // Merge q-entries that share an eigenvalue (different block sizes).
    std::vector<ISpElement> merged;
    for (auto& e : sd.isp) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const ISpElement& m) {
            return m.source == e.source && same_value(m.x, e.x) && m.y.sign() == e.y.sign();
        });
        if (it == merged.end()) {
            merged.push_back(std::move(e));
        } else {
            it->mult += e.mult;
        }
    }
    sd.isp = std::move(merged);
    std::sort(sd.sp.begin(), sd.sp.end(), [](const SpElement& a, const SpElement& b) {
        if (a.alpha.exact && b.alpha.exact) return *a.alpha.exact < *b.alpha.exact;
        return a.alpha.approx < b.alpha.approx;
    });
    std::sort(sd.isp.begin(), sd.isp.end(), [](const ISpElement& a, const ISpElement& b) {
        if (!same_value(a.x, b.x)) return a.x.approx < b.x.approx;
        return a.y < b.y;
    });
    return sd;
}

HalfplaneCount halfplane_count(const SpectrumData& sd, const Rational& x) {
    HalfplaneCount hc;
    const Rational x1 = x + 1;
    auto place = [&](const SpecReal& a, int mult, bool imaginary) {
        auto lo = compare(a, x);
        auto hi = compare(a, x1);
        if (!lo || !hi || *lo == 0 || *hi == 0) {
            hc.boundary = true;
            return;
        }
        const bool in = *lo > 0 && *hi < 0;
        (in ? hc.inside : hc.outside) += mult;
        if (imaginary) (in ? hc.isp_inside : hc.isp_outside) += mult;
    };
    for (const auto& e : sd.sp) place(e.alpha, e.mult, false);
    for (const auto& e : sd.isp) place(e.x, e.mult, true);
    return hc;
}

std::vector<std::string> symmetry_check(const SpectrumData& sd) {
    std::vector<std::string> bad;
    auto reflect = [](const SpecReal& a) {
        SpecReal r = a;
        if (r.exact) *r.exact = 2 - *r.exact;
        r.approx = BigFloat(2L, a.approx.precision()) - a.approx;
        return r;
    };
    for (const auto& e : sd.sp) {
        if (e.alpha.is_integer()) continue;
        const SpecReal target = reflect(e.alpha);
        int found = 0;
        for (const auto& o : sd.sp)
            if (same_value(o.alpha, target)) found += o.mult;
        if (found != e.mult)
            bad.push_back("Sp: multiplicity of " + e.alpha.to_string() + " is " + std::to_string(e.mult) +
                          " but its mirror 2 - alpha has " + std::to_string(found));
    }
    for (const auto& e : sd.isp) {
        if (e.x.is_integer()) continue;
        const SpecReal target = reflect(e.x);
        int found = 0;
        for (const auto& o : sd.isp)
            if (same_value(o.x, target) && abs(o.y + e.y) <= boundary_tolerance()) found += o.mult;
        if (found != e.mult)
            bad.push_back("ISp: point " + e.x.to_string() + " + i*" + e.y.to_string(20) +
                          " has no point reflection about 1 with equal multiplicity");
    }
    return bad;
}

}  // namespace hnum
