#include "hnum/pipeline.hpp"

#include <sstream>

namespace hnum {

namespace {

void finish(LinkAnalysis& a, Precision start) {
    Precision prec = start;
    for (;;) {
        try {
            a.jordan = jordan_partition(a.hvs, prec);
            a.eqsig = equivariant_signatures(a.hvs, a.jordan);
            break;
        } catch (const PrecisionError&) {
            if (prec.doubled() > kPrecisionCeiling) throw;
            prec = prec.doubled();
        }
    }
    a.precision = prec;
    a.hn = h_numbers(a.jordan, a.eqsig, a.split.s0_dim);
    a.sd = spectrum(a.hn);
    a.tower = alexander_tower(a.S);
    for (auto& f : check_hvs(a.hvs)) a.failures.push_back(std::move(f));
    for (auto& f : eigen_pairing_check(a.jordan).violations) a.failures.push_back(std::move(f));
    for (auto& f : check_hnumbers(a.hn, a.jordan, a.hvs.dim)) a.failures.push_back(std::move(f));
}

}  // namespace

LinkAnalysis analyze_seifert(const RatMatrix& S, Precision start, std::string name) {
    LinkAnalysis a;
    a.name = std::move(name);
    a.S = S;
    a.split = split_degenerate({S, a.name});
    if (auto err = replay_split(S, a.split)) a.failures.push_back("split witness: " + *err);
    a.hvs = build_hvs(a.split);
    finish(a, start);
    return a;
}

LinkAnalysis analyze_variation(const RatMatrix& V, const std::optional<RatMatrix>& h, Precision start,
                               std::string name) {
    LinkAnalysis a;
    a.name = std::move(name);
    a.hvs = build_hvs_from_variation(V);
    a.S = a.hvs.S;
    a.split.s_ndeg = a.S;
    if (h && !(*h == a.hvs.h)) a.failures.push_back("supplied monodromy differs from V (V^{-1})^T");
    finish(a, start);
    return a;
}

bool SignatureComparison::agree() const {
    if (direct.sigma != table.sigma || direct.nullity != table.nullity) return false;
    if (spectral && (spectral->from_sp != direct.sigma || spectral->from_esp != direct.sigma)) return false;
    return true;
}

SignatureComparison compare_signatures(const LinkAnalysis& a, const Rational& turns) {
    SignatureComparison c;
    Precision prec = a.precision;
    for (;;) {
        try {
            c.direct = tristram_levine_direct(a.S, turns, prec, &a.tower.invariant_factors);
            break;
        } catch (const PrecisionError&) {
            if (prec.doubled() > kPrecisionCeiling) throw;
            prec = prec.doubled();
        }
    }
    c.table = tristram_levine_from_h(a.hn, turns);
    c.spectral = tristram_levine_from_spectrum(a.sd, turns);
    return c;
}

std::vector<std::string> cross_check(const LinkAnalysis& a, const std::vector<Rational>& zetas) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(a.name.empty() ? s : a.name + ": " + s); };

    if (a.tower.m0 != static_cast<int>(a.hn.s0_dim))
        fail("m0 = " + std::to_string(a.tower.m0) + " but dim S0 = " + std::to_string(a.hn.s0_dim));
    const LaurentPoly first = a.tower.delta(a.tower.m0);
    if (first.poly.degree() != a.alexander_degree())
        fail("deg Delta_m0 = " + std::to_string(first.poly.degree()) + " but dim U = " + std::to_string(a.alexander_degree()));
    if (a.hvs.dim > 0 && !(LaurentPoly::normalize(a.hvs.h.charpoly()) == first))
        fail("Delta_m0 differs from the characteristic polynomial of h");
    if (a.sd.cardinality() != first.poly.degree())
        fail("#ESp = " + std::to_string(a.sd.cardinality()) + " but deg Delta_m0 = " + std::to_string(first.poly.degree()));

    for (const auto& jc : a.jordan) {
        const auto I = alexander_multiplicities_from_jordan(a.jordan, jc.cls.key);
        for (std::size_t n = 0; n < I.size() + 1; ++n) {
            const int want = n < I.size() ? I[n] : 0;
            const int got = a.tower.order(static_cast<int>(n) + a.tower.m0, jc.cls.key.factor);
            if (got != want)
                fail("ord Delta_" + std::to_string(n + static_cast<std::size_t>(a.tower.m0)) + " at " + to_string(jc.cls.key) +
                     " = " + std::to_string(got) + " but I(" + std::to_string(n) + ") = " + std::to_string(want));
        }
    }
    const int nq_tower = nakanishi_from_tower(a.tower).value;
    const int nq_jordan = nakanishi_from_jordan(a.jordan, a.hn.s0_dim).value;
    if (nq_tower != nq_jordan)
        fail("Nakanishi index " + std::to_string(nq_tower) + " (tower) vs " + std::to_string(nq_jordan) + " (Jordan)");

    for (const auto& v : symmetry_check(a.sd)) fail(v);

    for (const auto& z : zetas) {
        const Rational t = reduce_turns(z);
        if (t == 0) continue;
        const SignatureComparison c = compare_signatures(a, t);
        std::ostringstream os;
        os << "zeta turns " << to_string(t) << ": direct (" << c.direct.sigma << "," << c.direct.nullity << ") table ("
           << c.table.sigma << "," << c.table.nullity << ")";
        if (c.spectral) os << " spectrum " << c.spectral->from_sp << " esp " << c.spectral->from_esp;
        if (!c.agree()) fail("signature routes disagree at " + os.str());
        const SignatureSample conj = tristram_levine_from_h(a.hn, 1 - t);
        if (conj.sigma != c.table.sigma) fail("sigma(zeta) != sigma(conj zeta) at " + os.str());
    }
    return bad;
}

std::vector<Rational> zeta_sweep(const LinkAnalysis& a, int n) {
    std::vector<Rational> out;
    if (n <= 0) return out;
    auto hits = [&](const Rational& t) {
        for (const auto& [key, info] : a.hn.eigen) {
            if (info.status != UnitCircleStatus::on) continue;
            if (info.turns) {
                if (*info.turns == t) return true;
                continue;
            }
            SpecReal s{std::nullopt, info.value.arg() / (BigFloat::pi(info.value.precision()) * BigFloat(2L, info.value.precision()))};
            if (!compare(s, t)) return true;
        }
        return false;
    };
    for (int j = 1; j <= n; ++j) {
        Rational base(2 * j - 1, 2 * n);
        base.canonicalize();
        Rational t = base;
        for (int s = 1; hits(t); ++s) {
            Rational step((s + 1) / 2, 12 * n);
            step.canonicalize();
            t = base + (s % 2 ? step : Rational(-step));
            t.canonicalize();
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace hnum
