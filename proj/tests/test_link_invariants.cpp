#include "doctest.h"

#include "hnum/catalog.hpp"
#include "hnum/pipeline.hpp"
#include "test_support.hpp"

using namespace hnum;

TEST_CASE("direct signatures agree with the mpmath oracle") {
    for (const auto& row : testing::load_data("signature_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const RatMatrix S = testing::matrix_of(row["seifert"]);
        for (const auto& s : row["samples"]) {
            const Rational t = *parse_rational(s["turns"].get<std::string>());
            CAPTURE(to_string(t));
            const SignatureSample d = tristram_levine_direct(S, t);
            CHECK(d.sigma == s["sigma"].get<int>());
            CHECK(d.nullity == s["nullity"].get<int>());
        }
    }
}

TEST_CASE("table and spectral routes agree with the oracle where defined") {
    for (const auto& row : testing::load_data("signature_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const LinkAnalysis a = analyze_seifert(testing::matrix_of(row["seifert"]));
        for (const auto& s : row["samples"]) {
            const Rational t = *parse_rational(s["turns"].get<std::string>());
            CAPTURE(to_string(t));
            const SignatureSample tab = tristram_levine_from_h(a.hn, t);
            CHECK(tab.sigma == s["sigma"].get<int>());
            CHECK(tab.nullity == s["nullity"].get<int>());
            if (auto sp = tristram_levine_from_spectrum(a.sd, t); sp && s["nullity"].get<int>() == 0) {
                CHECK(sp->from_sp == s["sigma"].get<int>());
                CHECK(sp->from_esp == s["sigma"].get<int>());
            }
        }
    }
}

TEST_CASE("8_20 signature vanishes except at its eigenvalues") {
    const LinkAnalysis a = analyze_seifert(*catalog_entry("8_20").seifert);
    for (int j = 1; j < 60; ++j) {
        Rational t(j, 60);
        t.canonicalize();
        const SignatureComparison c = compare_signatures(a, t);
        CHECK(c.agree());
        const bool at_eigen = t == Rational(1, 6) || t == Rational(5, 6);
        CHECK(c.direct.sigma == (at_eigen ? 1 : 0));
        CHECK(c.direct.nullity == (at_eigen ? 1 : 0));
    }
}

TEST_CASE("exact and numeric direct routes agree") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const RatMatrix S = testing::random_matrix(rng, 2 + static_cast<std::size_t>(trial % 5));
        const auto factors = alexander_invariant_factors(S);
        // 29 and 31 have phi > 24 so these go through the numeric route; compare with the table route
        const LinkAnalysis a = analyze_seifert(S);
        for (const Rational t : {Rational(3, 29), Rational(14, 31), Rational(1, 2), Rational(2, 9)}) {
            const SignatureSample d = tristram_levine_direct(S, t, kDefaultPrecision, &factors);
            const SignatureSample h = tristram_levine_from_h(a.hn, t);
            CHECK(d.sigma == h.sigma);
            CHECK(d.nullity == h.nullity);
        }
    }
}

TEST_CASE("turn reduction and zeta = 1") {
    CHECK(reduce_turns(Rational(7, 6)) == Rational(1, 6));
    CHECK(reduce_turns(Rational(-1, 6)) == Rational(5, 6));
    CHECK_THROWS_AS(tristram_levine_direct(RatMatrix{{-1}}, Rational(1)), std::domain_error);
}

TEST_CASE("Alexander towers agree with the minors oracle") {
    for (const auto& row : testing::load_data("alexander_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const AlexanderTower tw = alexander_tower(testing::matrix_of(row["seifert"]));
        CHECK(tw.m0 == row["m0"].get<int>());
        const auto& want = row["tower"];
        REQUIRE(tw.polys.size() == want.size());
        for (std::size_t k = 0; k < want.size(); ++k) {
            if (want[k].empty()) CHECK(tw.polys[k].is_zero());
            else CHECK(tw.polys[k].poly == testing::poly_of(want[k]));
        }
        CHECK(tw.delta(static_cast<int>(want.size()) + 3).is_one());
    }
}

TEST_CASE("orders of vanishing and the multiplicities I(n)") {
    // trefoil # trefoil: Delta_0 = (t^2 - t + 1)^2, Delta_1 = t^2 - t + 1
    const RatMatrix tt{{-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, -1, -1}};
    const LinkAnalysis a = analyze_seifert(tt);
    const RatPoly phi6{1, -1, 1};
    CHECK(a.tower.order(0, phi6) == 2);
    CHECK(a.tower.order(1, phi6) == 1);
    CHECK(a.tower.order(2, phi6) == 0);
    CHECK(alexander_multiplicities_from_jordan(a.jordan, EigenKey{phi6, 0}) == std::vector<int>{2, 1, 0});
    CHECK(nakanishi_from_tower(a.tower).value == 2);
    CHECK(nakanishi_from_jordan(a.jordan, a.hn.s0_dim).value == 2);

    // zero block: Delta_0 = 0 has infinite order
    const AlexanderTower z = alexander_tower(RatMatrix{{-1, 0, 0}, {-1, -1, 0}, {0, 0, 0}});
    CHECK(z.order(0, phi6) == -1);
    CHECK(z.order(1, phi6) == 1);
}

TEST_CASE("tower and Jordan data agree on random matrices") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        RatMatrix S = testing::random_matrix(rng, 2 + static_cast<std::size_t>(trial % 5));
        if (trial % 4 == 0) S = RatMatrix::block_diagonal(S, RatMatrix(1, 1));
        if (trial % 4 == 1) S = RatMatrix::block_diagonal(S, S);
        const LinkAnalysis a = analyze_seifert(S);
        CHECK(cross_check(a, {Rational(1, 2), Rational(1, 3)}).empty());
    }
}

TEST_CASE("trefoil: Delta_0 and rational Nakanishi index") {
    const LinkAnalysis a = analyze_seifert(RatMatrix{{-1, 0}, {-1, -1}});
    CHECK(a.tower.delta(0).poly == RatPoly{1, -1, 1});
    CHECK(nakanishi_from_tower(a.tower).value == 1);
    CHECK(nakanishi_from_jordan(a.jordan, 0).value == 1);
}
