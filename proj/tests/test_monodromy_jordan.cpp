#include "doctest.h"

#include <algorithm>

#include "hnum/catalog.hpp"
#include "hnum/factor.hpp"
#include "hnum/jordan.hpp"
#include "test_support.hpp"

using namespace hnum;

namespace {

std::vector<JordanClass> classes_of(const RatMatrix& S) {
    return jordan_partition(build_hvs(split_degenerate({S, ""})), kDefaultPrecision);
}

}  // namespace

TEST_CASE("Jordan partitions agree with the sympy oracle") {
    for (const auto& row : testing::load_data("jordan_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const auto classes = classes_of(testing::matrix_of(row["seifert"]));
        for (const auto& f : row["factors"]) {
            const RatPoly factor = testing::poly_of(f["factor"]).primitive_part();
            std::vector<int> want = f["blocks"].get<std::vector<int>>();
            std::sort(want.begin(), want.end());
            int roots_seen = 0;
            for (const auto& jc : classes) {
                if (jc.cls.key.factor != factor) continue;
                ++roots_seen;
                CHECK(jc.part.theta() == want);
                CHECK(jc.part.multiplicity == f["multiplicity"].get<int>());
            }
            CHECK(roots_seen == factor.degree());
        }
        CHECK(eigen_pairing_check(classes).ok());
    }
}

TEST_CASE("printed monodromy of 10_99 has two blocks of size 2 at each primitive sixth root") {
    const LinkRecord r = catalog_entry("10_99");
    REQUIRE(r.monodromy);
    const RatMatrix& h = *r.monodromy;
    CHECK(h.charpoly() == RatPoly{1, -1, 1}.pow(4));
    const auto classes = jordan_partition(h, kDefaultPrecision);
    REQUIRE(classes.size() == 2);
    for (const auto& jc : classes) {
        CHECK(jc.part.theta() == std::vector<int>{2, 2});
        CHECK(jc.cls.status == UnitCircleStatus::on);
    }
    CHECK(*classes[0].cls.turns == Rational(1, 6));
    CHECK(*classes[1].cls.turns == Rational(5, 6));
    CHECK(classes[0].cls.conjugate == classes[1].cls.key);
}

TEST_CASE("printed monodromy of 12n106 is a single block of size 4 per root") {
    const RatMatrix h = *catalog_entry("12n106").monodromy;
    const auto classes = jordan_partition(h, kDefaultPrecision);
    REQUIRE(classes.size() == 2);
    for (const auto& jc : classes) CHECK(jc.part.theta() == std::vector<int>{4});
}

TEST_CASE("partition from kernel dimensions") {
    // J_3(1) (+) J_1(1) (+) J_2(2)
    RatMatrix h(6, 6);
    for (std::size_t i = 0; i < 4; ++i) h(i, i) = 1;
    h(0, 1) = 1;
    h(1, 2) = 1;
    h(4, 4) = 2;
    h(5, 5) = 2;
    h(4, 5) = 1;
    const JordanPartition p = partition_for_factor(h, RatPoly{-1, 1}, 4);
    CHECK(p.theta() == std::vector<int>{1, 3});
    CHECK(p.dimker == std::vector<int>{0, 2, 3, 4, 4});
    CHECK(p.block_count() == 2);
    CHECK(p.max_size() == 3);
    CHECK(partition_for_factor(h, RatPoly{-2, 1}, 2).theta() == std::vector<int>{2});
}

TEST_CASE("eigenvalue placement: on, inside, outside") {
    const auto fig8 = classes_of(RatMatrix{{1, 0}, {-1, -1}});
    REQUIRE(fig8.size() == 2);
    int inside = 0, outside = 0;
    for (const auto& jc : fig8) {
        CHECK(jc.cls.root.real);
        CHECK_FALSE(jc.cls.turns);
        inside += jc.cls.status == UnitCircleStatus::inside;
        outside += jc.cls.status == UnitCircleStatus::outside;
        REQUIRE(jc.cls.reflection);
        CHECK_FALSE(*jc.cls.reflection == jc.cls.key);
    }
    CHECK(inside == 1);
    CHECK(outside == 1);

    const auto twist = classes_of(RatMatrix{{3}});
    REQUIRE(twist.size() == 1);
    CHECK(twist[0].cls.status == UnitCircleStatus::on);
    CHECK(*twist[0].cls.turns == 0);
}

TEST_CASE("torus knot T(3,4) eigenvalues are primitive 6th and 12th roots of unity") {
    const auto classes = classes_of(torus_seifert(3, 4));
    std::vector<Rational> turns;
    for (const auto& jc : classes) {
        REQUIRE(jc.cls.turns);
        turns.push_back(*jc.cls.turns);
        CHECK(jc.part.theta() == std::vector<int>{1});
    }
    std::sort(turns.begin(), turns.end());
    CHECK(turns == std::vector<Rational>{Rational(1, 12), Rational(1, 6), Rational(5, 12), Rational(7, 12),
                                         Rational(5, 6), Rational(11, 12)});
}
