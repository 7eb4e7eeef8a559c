#include "doctest.h"

#include "hnum/pipeline.hpp"
#include "hnum/skein.hpp"
#include "test_support.hpp"

using namespace hnum;

namespace {

const RatPoly phi6{1, -1, 1};
const RatPoly t_minus_1{-1, 1};

// L+ = trefoil, L- = unknot, L0 = Hopf-type link with S0 = (1)
const RatMatrix kPlus{{1, 0}, {1, 1}};
const RatMatrix kMinus{{1, 0}, {1, 0}};
const RatMatrix kZero{{1}};

std::vector<int> raw(const std::vector<Order>& v) {
    std::vector<int> out;
    for (const auto& o : v) out.push_back(o.value);
    return out;
}

RatPoly poly_det(std::vector<std::vector<RatPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return RatPoly{1};
    if (n == 1) return m[0][0];
    RatPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<RatPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<RatPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        RatPoly term = m[0][j] * poly_det(std::move(minor));
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

int ord(const RatPoly& p, const RatPoly& f) { return p.multiplicity_of(f); }

SkeinTriple random_triple(std::mt19937_64& rng, std::size_t n) {
    const RatMatrix sp = testing::random_matrix(rng, n + 1);
    RatMatrix sm = sp;
    sm(n, n) -= 1;
    return *validate_triple(sp, sm, sp.block(0, 0, n, n)).triple;
}

}  // namespace

TEST_CASE("triple validation") {
    CHECK(validate_triple(kPlus, kMinus, kZero).ok());
    // corner entry must be +1 on the S+ side
    CHECK_FALSE(validate_triple(kMinus, kPlus, kZero).ok());
    CHECK_FALSE(validate_triple(kPlus, kPlus, kZero).ok());
    // difference in the transposed corner position
    const RatMatrix a{{1, 0}, {0, 1}};
    const RatMatrix b{{1, 0}, {-1, 1}};
    const auto v = validate_triple(a, b, RatMatrix{{1}});
    CHECK_FALSE(v.ok());
    CHECK(v.reason.find("(2,1)") != std::string::npos);
    // S0 must be S+ without its last row and column
    CHECK_FALSE(validate_triple(kPlus, kMinus, RatMatrix{{2}}).ok());
    CHECK_FALSE(validate_triple(kPlus, kMinus, RatMatrix{{1, 0}, {0, 1}}).ok());
}

TEST_CASE("trefoil / unknot triple: signature skein at zeta = -1") {
    const SkeinTriple t{kPlus, kMinus, kZero};
    const auto r = check_signature_skein(t, {Rational(1, 2)});
    CHECK(r.ok());
    const auto p = tristram_levine_direct(kPlus, Rational(1, 2));
    const auto m = tristram_levine_direct(kMinus, Rational(1, 2));
    const auto z = tristram_levine_direct(kZero, Rational(1, 2));
    CHECK(std::abs(p.sigma - z.sigma) == 1);
    CHECK(std::abs(p.nullity - z.nullity) == 0);
    CHECK(std::abs(m.sigma - z.sigma) == 1);
    CHECK(std::abs(m.nullity - z.nullity) == 0);
}

TEST_CASE("trefoil / unknot triple: d_k sequences and P_N") {
    const SkeinTriple t{kPlus, kMinus, kZero};
    const TripleData d = triple_data(t);
    CHECK(raw(dk_sequence(d.plus, phi6, 3)) == std::vector<int>{1, 0, 0});
    CHECK(raw(dk_sequence(d.minus, phi6, 3)) == std::vector<int>{0, 0, 0});
    CHECK(raw(dk_sequence(d.zero, phi6, 3)) == std::vector<int>{0, 0, 0});
    CHECK(check_dk_inequalities(d, phi6).ok());

    const LinkAnalysis plus = analyze_seifert(kPlus);
    const LinkAnalysis minus = analyze_seifert(kMinus);
    CHECK(pn_counts(plus.jordan, phi6) == std::vector<int>{1});
    CHECK(pn_counts(minus.jordan, phi6).empty());
    CHECK(check_pn_bounds(plus.jordan, minus.jordan, phi6).ok());
    CHECK(check_nakanishi_bound(t, d).ok());
}

TEST_CASE("eigenvalue 1 branch on a two-component triple") {
    // S- has a zero block, so Delta_0 of L- vanishes to infinite order at t = 1
    const RatMatrix sp{{1, 0}, {0, 1}};
    const RatMatrix sm{{1, 0}, {0, 0}};
    const auto v = validate_triple(sp, sm, RatMatrix{{1}});
    REQUIRE(v.ok());
    const TripleData d = triple_data(*v.triple);
    const auto factors = triple_eigen_factors(d);
    CHECK(std::find(factors.begin(), factors.end(), t_minus_1) != factors.end());
    const SkeinReport r = check_dk_inequalities(d, t_minus_1);
    CHECK(r.ok());
    bool branch = false;
    for (const auto& c : r.checks) branch |= c.what.find("min(") != std::string::npos;
    CHECK(branch);
    CHECK(dk_sequence(d.minus, t_minus_1, 1)[0].infinite());
}

TEST_CASE("empty S0 is vacuous") {
    const auto v = validate_triple(RatMatrix{{2}}, RatMatrix{{1}}, RatMatrix(0, 0));
    REQUIRE(v.ok());
    const TripleData d = triple_data(*v.triple);
    for (const auto& f : triple_eigen_factors(d)) CHECK(check_dk_inequalities(d, f).ok());
    CHECK(check_signature_skein(*v.triple, {Rational(1, 2), Rational(1, 3)}).ok());
}

TEST_CASE("infinite order arithmetic saturates") {
    const Order inf{Order::kInfinite};
    CHECK(inf >= Order{5});
    CHECK_FALSE(Order{5} >= inf);
    CHECK((inf + 1).infinite());
    CHECK(min(inf, Order{2}).value == 2);
    CHECK(inf.to_string() == "inf");
}

TEST_CASE("P_N bound beyond all block sizes is trivial") {
    const LinkAnalysis a = analyze_seifert(kPlus);
    CHECK(pn_counts(a.jordan, RatPoly{1, 1, 1, 1, 1}).empty());
    CHECK(check_pn_bounds(a.jordan, a.jordan, RatPoly{1, 1, 1, 1, 1}).ok());
}

TEST_CASE("Laplace expansion lemma: ord det H >= min over column cofactors") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(-2, 2);
    int nontrivial = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<RatPoly>> H(5, std::vector<RatPoly>(5));
        for (auto& row : H)
            for (auto& e : row) {
                // entries sharing a factor t - 1 often, to get positive orders
                e = RatPoly{coef(rng), coef(rng)};
                if (coef(rng) > 0) e = e * t_minus_1;
            }
        const RatPoly det = poly_det(H);
        for (const RatPoly& f : {t_minus_1, phi6, RatPoly{1, 1}}) {
            const std::size_t j = static_cast<std::size_t>(trial % 5);
            int best = -1;
            for (std::size_t i = 0; i < 5; ++i) {
                std::vector<std::vector<RatPoly>> minor;
                for (std::size_t r = 0; r < 5; ++r) {
                    if (r == i) continue;
                    std::vector<RatPoly> row;
                    for (std::size_t c = 0; c < 5; ++c)
                        if (c != j) row.push_back(H[r][c]);
                    minor.push_back(std::move(row));
                }
                const int o = ord(poly_det(std::move(minor)), f);
                if (o == -1) continue;
                best = best == -1 ? o : std::min(best, o);
            }
            const int od = ord(det, f);
            if (best > 0) ++nontrivial;
            if (od != -1 && best != -1) CHECK(od >= best);
        }
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("random triples satisfy every skein inequality") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const SkeinTriple t = random_triple(rng, 1 + static_cast<std::size_t>(trial % 4));
        const TripleData d = triple_data(t);
        const LinkAnalysis plus = analyze_seifert(t.s_plus);
        const LinkAnalysis minus = analyze_seifert(t.s_minus);
        CHECK(check_signature_skein(t, {Rational(1, 2), Rational(1, 3), Rational(1, 5)}).ok());
        for (const auto& f : triple_eigen_factors(d)) {
            CHECK(check_dk_inequalities(d, f).ok());
            CHECK(check_pn_bounds(plus.jordan, minus.jordan, f).ok());
        }
        CHECK(check_nakanishi_bound(t, d).ok());
    }
}

TEST_CASE("semicontinuity: trefoil over the unknot") {
    const LinkAnalysis tre = analyze_seifert(RatMatrix{{-1, 0}, {-1, -1}});
    const LinkAnalysis unk = analyze_seifert(RatMatrix(0, 0));
    const auto r = check_semicontinuity(tre.sd, tre.alexander_degree(), unk.sd, unk.alexander_degree(), Hypothesis::a,
                                        Rational(2, 5));
    CHECK(r.verdict == SemicontVerdict::holds);
    CHECK(r.count1 == 2);
    CHECK(r.count2 == 0);
    CHECK(check_semicontinuity(tre.sd, 2, unk.sd, 0, Hypothesis::a, Rational(5, 6)).verdict ==
          SemicontVerdict::refused_boundary);
    CHECK(check_semicontinuity(tre.sd, 2, unk.sd, 0, Hypothesis::a, Rational(0)).verdict ==
          SemicontVerdict::refused_boundary);
    // hypothesis (b) needs a strict degree drop
    CHECK(check_semicontinuity(tre.sd, 2, tre.sd, 2, Hypothesis::b, Rational(2, 5)).verdict ==
          SemicontVerdict::hypotheses_not_met);
    CHECK(check_semicontinuity(unk.sd, 0, tre.sd, 2, Hypothesis::a, Rational(2, 5)).verdict ==
          SemicontVerdict::hypotheses_not_met);
    CHECK(to_string(SemicontVerdict::holds) == "holds");
}
