#include "hnum/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hnum/factor.hpp"

namespace hnum {

bool SkeinReport::ok() const { return failures() == 0; }

int SkeinReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const SkeinCheck& c) { return !c.ok; }));
}

void SkeinReport::add(std::string what, bool ok, std::string detail) {
    checks.push_back({std::move(what), ok, std::move(detail)});
}

TripleValidation validate_triple(const RatMatrix& sp, const RatMatrix& sm, const RatMatrix& s0) {
    TripleValidation v;
    if (!sp.is_square() || !sm.is_square() || !s0.is_square()) {
        v.reason = "all three Seifert matrices must be square";
        return v;
    }
    const std::size_t m = sp.rows();
    if (m == 0 || sm.rows() != m || s0.rows() + 1 != m) {
        v.reason = "sizes must be n+1, n+1, n (got " + std::to_string(sp.rows()) + ", " + std::to_string(sm.rows()) +
                   ", " + std::to_string(s0.rows()) + ")";
        return v;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Rational want = (i + 1 == m && j + 1 == m) ? Rational(1) : Rational(0);
            const Rational got = sp(i, j) - sm(i, j);
            if (got != want) {
                v.reason = "S+ - S- has entry " + to_string(got) + " at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + "), expected " + to_string(want);
                return v;
            }
        }
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j + 1 < m; ++j)
            if (s0(i, j) != sp(i, j)) {
                v.reason = "S0 differs from S+ at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return v;
            }
    v.triple = SkeinTriple{sp, sm, s0};
    return v;
}

TripleData triple_data(const SkeinTriple& t) {
    return {t, alexander_tower(t.s_plus), alexander_tower(t.s_minus), alexander_tower(t.s_zero)};
}

std::vector<Order> dk_sequence(const AlexanderTower& tower, const RatPoly& f, int count) {
    std::vector<Order> d;
    for (int k = 0; k < count; ++k) d.push_back(Order::from_raw(tower.order(k, f)));
    return d;
}

SkeinReport check_signature_skein(const SkeinTriple& t, const std::vector<Rational>& zetas, Precision prec) {
    SkeinReport rep;
    for (const auto& z : zetas) {
        const SignatureSample s0 = tristram_levine_direct(t.s_zero, z, prec);
        for (int side = 0; side < 2; ++side) {
            const SignatureSample s = tristram_levine_direct(side == 0 ? t.s_plus : t.s_minus, z, prec);
            const int lhs = std::abs(s.sigma - s0.sigma) + std::abs(s.nullity - s0.nullity);
            std::ostringstream os;
            os << "zeta=e^{2pi i " << to_string(s.turns) << "}: sigma " << s.sigma << " vs " << s0.sigma << ", nullity "
               << s.nullity << " vs " << s0.nullity;
            rep.add(std::string("signature skein L") + (side == 0 ? "+" : "-"), lhs <= 1, os.str());
        }
    }
    return rep;
}

namespace {

std::string seq_text(const std::vector<Order>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].to_string();
    return s + ")";
}

}  // namespace

SkeinReport check_dk_inequalities(const TripleData& d, const RatPoly& f) {
    SkeinReport rep;
    const int count = static_cast<int>(d.triple.s_plus.rows()) + 2;
    const auto dp = dk_sequence(d.plus, f, count + 1);
    const auto dm = dk_sequence(d.minus, f, count + 1);
    const auto d0 = dk_sequence(d.zero, f, count + 1);
    const bool at_one = f == RatPoly{-1, 1};
    const std::string where = " at " + f.to_string() + " d+=" + seq_text(dp) + " d-=" + seq_text(dm) + " d0=" + seq_text(d0);
    bool dless = true, simple = true, second = true, cross = true;
    for (int k = 0; k < count; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        for (const auto* seq : {&dp, &dm, &d0})
            if (!((*seq)[ku] >= (*seq)[ku + 1])) dless = false;
        if (!(d0[ku] >= dp[ku + 1]) || !(d0[ku] >= dm[ku + 1])) simple = false;
        if (!(dp[ku] >= d0[ku + 1]) || !(dm[ku] >= d0[ku + 1])) second = false;
        if (!at_one) {
            if (!(dp[ku] >= dm[ku + 1]) || !(dm[ku] >= dp[ku + 1])) cross = false;
        } else {
            if (!(dp[ku] >= min(dm[ku + 1] + 1, dm[ku])) || !(dm[ku] >= min(dp[ku + 1] + 1, dp[ku]))) cross = false;
        }
    }
    rep.add("d_k >= d_{k+1}", dless, where);
    rep.add("d0_k >= d+-_{k+1}", simple, where);
    rep.add("d+-_k >= d0_{k+1}", second, where);
    rep.add(at_one ? "d+-_k >= min(d-+_{k+1} + 1, d-+_k)" : "d+-_k >= d-+_{k+1}", cross, where);
    return rep;
}

std::vector<int> pn_counts(const std::vector<JordanClass>& jordan, const RatPoly& f) {
    for (const auto& jc : jordan) {
        if (jc.cls.key.factor != f) continue;
        std::vector<int> P;
        for (int N = 1; N <= jc.part.max_size(); ++N) {
            int c = 0;
            for (int k = N; k <= jc.part.max_size(); ++k) c += jc.part.blocks(k);
            P.push_back(c);
        }
        return P;
    }
    return {};
}

SkeinReport check_pn_bounds(const std::vector<JordanClass>& plus, const std::vector<JordanClass>& minus,
                            const RatPoly& f) {
    SkeinReport rep;
    const auto pp = pn_counts(plus, f);
    const auto pm = pn_counts(minus, f);
    const std::size_t top = std::max(pp.size(), pm.size()) + 1;
    auto at = [](const std::vector<int>& v, std::size_t N) { return N - 1 < v.size() ? v[N - 1] : 0; };
    for (std::size_t N = 1; N <= top; ++N) {
        const int diff = std::abs(at(pp, N) - at(pm, N));
        const int bound = N == 1 ? 1 : static_cast<int>(2 * N);
        rep.add("|P_" + std::to_string(N) + "^+ - P_" + std::to_string(N) + "^-| <= " + std::to_string(bound), diff <= bound,
                "at " + f.to_string() + ": " + std::to_string(at(pp, N)) + " vs " + std::to_string(at(pm, N)));
    }
    return rep;
}

SkeinReport check_nakanishi_bound(const SkeinTriple& t, const TripleData& d) {
    SkeinReport rep;
    auto knot = [](const RatMatrix& S) { return (S - S.transpose()).det() != 0; };
    if (!knot(t.s_plus) || !knot(t.s_minus)) return rep;
    const int a = nakanishi_from_tower(d.plus).value;
    const int b = nakanishi_from_tower(d.minus).value;
    rep.add("|n_Q(K+) - n_Q(K-)| <= 1", std::abs(a - b) <= 1, std::to_string(a) + " vs " + std::to_string(b));
    return rep;
}

std::vector<RatPoly> triple_eigen_factors(const TripleData& d) {
    std::set<RatPoly> fs{RatPoly{-1, 1}};
    for (const auto* tw : {&d.plus, &d.minus, &d.zero}) {
        const LaurentPoly first = tw->delta(tw->m0);
        if (first.poly.degree() <= 0) continue;
        for (const auto& fp : squarefree_factor_q(first.poly)) fs.insert(fp.factor);
    }
    return {fs.begin(), fs.end()};
}

std::string_view to_string(SemicontVerdict v) {
    switch (v) {
        case SemicontVerdict::holds: return "holds";
        case SemicontVerdict::violated: return "violated";
        case SemicontVerdict::hypotheses_not_met: return "hypotheses not met";
        case SemicontVerdict::refused_boundary: return "refused: spectrum meets the strip boundary";
    }
    return "unknown";
}

SemicontReport check_semicontinuity(const SpectrumData& sd1, int deg1, const SpectrumData& sd2, int deg2,
                                    Hypothesis hyp, const Rational& x) {
    SemicontReport r;
    r.deg1 = deg1;
    r.deg2 = deg2;
    if (x <= 0 || x >= 1) {
        r.verdict = SemicontVerdict::refused_boundary;
        r.detail = "x = " + to_string(x) + " is outside (0, 1)";
        return r;
    }
    const HalfplaneCount h1 = halfplane_count(sd1, x);
    const HalfplaneCount h2 = halfplane_count(sd2, x);
    if (h1.boundary || h2.boundary) {
        r.verdict = SemicontVerdict::refused_boundary;
        r.detail = "boundary of H_x meets the extended spectrum at x = " + to_string(x);
        return r;
    }
    r.count1 = h1.inside;
    r.count2 = h2.inside;
    const bool degrees = hyp == Hypothesis::a ? deg1 >= deg2 : deg1 > deg2;
    if (!degrees) {
        r.verdict = SemicontVerdict::hypotheses_not_met;
        r.detail = "degree condition fails: " + std::to_string(deg1) + (hyp == Hypothesis::a ? " < " : " <= ") +
                   std::to_string(deg2);
        return r;
    }
    r.verdict = r.count1 >= r.count2 ? SemicontVerdict::holds : SemicontVerdict::violated;
    r.detail = std::to_string(r.count1) + " >= " + std::to_string(r.count2);
    return r;
}

}  // namespace hnum
