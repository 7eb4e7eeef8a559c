#include "doctest.h"

#include "hnum/seifert.hpp"
#include "test_support.hpp"

using namespace hnum;

namespace {

RatMatrix block_sum(const RatMatrix& a, const RatMatrix& b) { return RatMatrix::block_diagonal(a, b); }

// P^T S P with P unimodular upper triangular plus a corner entry.
RatMatrix scramble(const RatMatrix& S) {
    const std::size_t n = S.rows();
    RatMatrix P = RatMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) P(i, i + 1) = 1;
    if (n > 2) P(n - 1, 0) = 1, P(n - 1, 1) = -1;
    REQUIRE(P.det() != 0);
    return P.transpose() * S * P;
}

}  // namespace

TEST_CASE("split sizes agree with the minors oracle") {
    for (const auto& row : testing::load_data("alexander_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const RatMatrix S = testing::matrix_of(row["seifert"]);
        const SeifertSplit split = split_degenerate({S, row["name"]});
        CHECK(split.s0_dim == row["m0"].get<std::size_t>());
        CHECK(split.s_ndeg.rows() == row["nondeg_dim"].get<std::size_t>());
        if (split.s_ndeg.rows() > 0) CHECK(split.s_ndeg.det() != 0);
        CHECK_FALSE(replay_split(S, split).has_value());
    }
}

TEST_CASE("hyperbolic pair destabilizes to nothing") {
    const SeifertSplit split = split_degenerate({RatMatrix{{0, 1}, {0, 0}}, "pair"});
    CHECK(split.s0_dim == 0);
    CHECK(split.s_ndeg.rows() == 0);
    REQUIRE(split.witness.size() == 1);
    CHECK(split.witness[0].kind == ReductionStep::Kind::destabilize);
}

TEST_CASE("zero block is detected through a congruence") {
    const RatMatrix trefoil{{-1, 0}, {-1, -1}};
    const RatMatrix S = scramble(block_sum(block_sum(trefoil, RatMatrix(1, 1)), RatMatrix{{0, 1}, {0, 0}}));
    const SeifertSplit split = split_degenerate({S, "scrambled"});
    CHECK(split.s0_dim == 1);
    CHECK(split.s_ndeg.rows() == 2);
    CHECK_FALSE(replay_split(S, split).has_value());
    const VariationStructure v = build_hvs(split);
    CHECK(v.h.charpoly() == RatPoly{1, -1, 1});
}

TEST_CASE("tampered witness is rejected on replay") {
    const RatMatrix S{{-1, 0, 0}, {-1, -1, 0}, {0, 0, 0}};
    SeifertSplit split = split_degenerate({S, "t"});
    REQUIRE_FALSE(split.witness.empty());
    split.witness[0].congruence(0, 0) += 1;
    CHECK(replay_split(S, split).has_value());
}

TEST_CASE("variation structure identities on random nondegenerate matrices") {
    std::mt19937_64 rng(11);
    int built = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const RatMatrix S = testing::random_matrix(rng, 2 + static_cast<std::size_t>(trial % 6));
        const SeifertSplit split = split_degenerate({S, ""});
        CHECK_FALSE(replay_split(S, split).has_value());
        if (split.s_ndeg.rows() == 0) continue;
        const VariationStructure v = build_hvs(split);
        CHECK(check_hvs(v).empty());
        CHECK(v.b == v.S - v.S.transpose());
        CHECK(v.h == v.V * v.S);
        const VariationStructure w = build_hvs_from_variation(v.V);
        CHECK(w.S == v.S);
        CHECK(w.h == v.h);
        ++built;
    }
    CHECK(built > 40);
}

TEST_CASE("singular variation is refused") {
    CHECK_THROWS_AS(build_hvs_from_variation(RatMatrix{{1, 1}, {1, 1}}), std::domain_error);
}
