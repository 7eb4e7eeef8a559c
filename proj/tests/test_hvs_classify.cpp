#include "doctest.h"

#include "hnum/catalog.hpp"
#include "hnum/pipeline.hpp"
#include "test_support.hpp"

using namespace hnum;

namespace {

const EigenKey mu{RatPoly{1, -1, 1}, 0};      // e^{i pi/3}
const EigenKey mu_bar{RatPoly{1, -1, 1}, 1};  // e^{-i pi/3}
const EigenKey one{RatPoly{-1, 1}, 0};

int total_entries(const HNumbers& hn) {
    int n = 0;
    for (const auto& [k, c] : hn.p) n += c;
    for (const auto& [k, c] : hn.q) n += c;
    return n;
}

}  // namespace

TEST_CASE("trefoil: one block of each sign at the primitive sixth roots") {
    const LinkAnalysis a = analyze_seifert(RatMatrix{{-1, 0}, {-1, -1}});
    CHECK(a.failures.empty());
    CHECK(a.hn.p_count(mu, 1, +1) == 1);
    CHECK(a.hn.p_count(mu_bar, 1, -1) == 1);
    CHECK(total_entries(a.hn) == 2);
    CHECK(a.hn.weighted_dim() == 2);
    CHECK(algebraicity_obstructions(a.hn).empty());
}

TEST_CASE("8_20: p^2(+1) at both eigenvalues") {
    const LinkAnalysis a = analyze_seifert(*catalog_entry("8_20").seifert);
    CHECK(a.failures.empty());
    CHECK(a.hn.p_count(mu, 2, +1) == 1);
    CHECK(a.hn.p_count(mu_bar, 2, +1) == 1);
    CHECK(total_entries(a.hn) == 2);
}

TEST_CASE("twist links: sign is -1 for positive twists, +1 for negative, table independent of |n|") {
    HNumbers reference_pos, reference_neg;
    for (int n = 1; n <= 5; ++n) {
        const LinkAnalysis pos = analyze_seifert(RatMatrix{{n}});
        const LinkAnalysis neg = analyze_seifert(RatMatrix{{-n}});
        CHECK(pos.hn.p_count(one, 1, -1) == 1);
        CHECK(neg.hn.p_count(one, 1, +1) == 1);
        CHECK(total_entries(pos.hn) == 1);
        CHECK(total_entries(neg.hn) == 1);
        if (n == 1) {
            reference_pos = pos.hn;
            reference_neg = neg.hn;
        }
        CHECK(pos.hn.same_counts(reference_pos));
        CHECK(neg.hn.same_counts(reference_neg));
    }
    // p^1_1(-1) != 0 is one of the algebraicity obstructions
    CHECK_FALSE(algebraicity_obstructions(analyze_seifert(RatMatrix{{2}}).hn).empty());
}

TEST_CASE("stage-isolated 10_99 / 12n family from variation matrices") {
    const LaurentPoly delta0 = LaurentPoly::normalize(RatPoly{1, -4, 10, -16, 19, -16, 10, -4, 1});
    for (const char* name : {"10_99", "12n106", "12n508", "12n604", "12n666"}) {
        CAPTURE(name);
        const LinkRecord r = catalog_entry(name);
        REQUIRE(r.variation);
        const LinkAnalysis a = analyze_variation(*r.variation, r.monodromy, kDefaultPrecision, name);
        CHECK(a.failures.empty());
        CHECK(a.tower.delta(0) == delta0);
        const std::string n = name;
        if (n == "10_99") {
            for (const auto& k : {mu, mu_bar})
                for (int u : {-1, 1}) CHECK(a.hn.p_count(k, 2, u) == 1);
            CHECK(total_entries(a.hn) == 4);
        } else if (n == "12n106") {
            CHECK(a.hn.p_count(mu, 4, -1) == 1);
            CHECK(a.hn.p_count(mu_bar, 4, -1) == 1);
            CHECK(total_entries(a.hn) == 2);
        } else if (n == "12n604") {
            for (int k : {1, 3}) {
                CHECK(a.hn.p_count(mu, k, +1) == 1);
                CHECK(a.hn.p_count(mu_bar, k, -1) == 1);
            }
            CHECK(total_entries(a.hn) == 4);
        } else {
            for (int k : {1, 3}) {
                CHECK(a.hn.p_count(mu, k, -1) == 1);
                CHECK(a.hn.p_count(mu_bar, k, +1) == 1);
            }
            CHECK(total_entries(a.hn) == 4);
        }
    }
}

TEST_CASE("printed monodromy must match the variation") {
    LinkRecord r = catalog_entry("10_99");
    RatMatrix wrong = *r.monodromy;
    wrong(0, 0) += 1;
    const LinkAnalysis a = analyze_variation(*r.variation, wrong, kDefaultPrecision, "10_99");
    CHECK_FALSE(a.failures.empty());
}

TEST_CASE("off-circle eigenvalues give q-numbers") {
    const LinkAnalysis a = analyze_seifert(RatMatrix{{1, 0}, {-1, -1}});
    CHECK(a.hn.p.empty());
    int q = 0;
    for (const auto& [k, c] : a.hn.q) {
        CHECK(k.k == 1);
        q += c;
    }
    CHECK(q == 1);
    CHECK_FALSE(algebraicity_obstructions(a.hn).empty());
}

TEST_CASE("mirror, reverse and connected sum act on tables as on matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix S = testing::random_matrix(rng, 2 + static_cast<std::size_t>(trial % 4));
        const RatMatrix T = testing::random_matrix(rng, 2);
        const LinkAnalysis a = analyze_seifert(S);
        CHECK(a.failures.empty());
        CHECK(check_hnumbers(a.hn, a.jordan, a.hvs.dim).empty());
        CHECK(analyze_seifert(-S.transpose()).hn.same_counts(transform_mirror(a.hn)));
        CHECK(analyze_seifert(S.transpose()).hn.same_counts(transform_reverse(a.hn)));
        CHECK(analyze_seifert(RatMatrix::block_diagonal(S, T)).hn.same_counts(connected_sum(a.hn, analyze_seifert(T).hn)));
    }
}

TEST_CASE("corrupted table is reported") {
    const LinkAnalysis a = analyze_seifert(RatMatrix{{-1, 0}, {-1, -1}});
    HNumbers bad = a.hn;
    bad.p[PKey{mu, 1, +1}] = 2;
    CHECK_FALSE(check_hnumbers(bad, a.jordan, a.hvs.dim).empty());
}
