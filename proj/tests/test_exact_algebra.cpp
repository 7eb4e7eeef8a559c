#include "doctest.h"

#include <algorithm>

#include "hnum/factor.hpp"
#include "hnum/number_field.hpp"
#include "hnum/rat_matrix.hpp"
#include "hnum/roots.hpp"
#include "test_support.hpp"

using namespace hnum;

namespace {

BigFloat decimal(const std::string& s, Precision p) {
    BigFloat x(p);
    mpfr_set_str(x.get(), s.c_str(), 10, MPFR_RNDN);
    return x;
}

// Laplace expansion along the first row.
Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        acc += (j % 2 ? -1 : 1) * m(0, j) * cofactor_det(minor);
    }
    return acc;
}

}  // namespace

TEST_CASE("rational parsing accepts integers and p/q only") {
    CHECK(*parse_rational("-3") == -3);
    CHECK(*parse_rational("6/4") == Rational(3, 2));
    CHECK(*parse_rational("+1/3") == Rational(1, 3));
    CHECK_FALSE(parse_rational("1.5"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational(""));
    CHECK(to_string(Rational(-4, 6)) == "-2/3");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("polynomial arithmetic, division and gcd") {
    const RatPoly a{1, -1, 1};  // t^2 - t + 1
    const RatPoly b{-1, 1};     // t - 1
    const RatPoly p = a * a * b;
    auto [q, r] = p.divmod(a);
    CHECK(r.is_zero());
    CHECK(q == a * b);
    CHECK(gcd(p, a * RatPoly{1, 1}) == a);
    CHECK(gcd(RatPoly{}, RatPoly{}).is_zero());
    CHECK(p.multiplicity_of(a) == 2);
    CHECK(p.multiplicity_of(b) == 1);
    CHECK(RatPoly{}.multiplicity_of(a) == -1);
    CHECK(a.self_reciprocal_sign() == 1);
    CHECK(b.self_reciprocal_sign() == -1);
    CHECK(RatPoly{0, 0, 2, 4}.strip_t_power() == RatPoly{2, 4});
    CHECK(RatPoly{0, 0, 2, 4}.trailing_zero_count() == 2);
    CHECK_THROWS_AS(a.divmod(RatPoly{}), std::domain_error);

    const auto e = extended_gcd(RatPoly{-1, 0, 1}, RatPoly{1, 2, 1});
    CHECK(e.g == RatPoly{1, 1});
    CHECK(e.s * RatPoly{-1, 0, 1} + e.t * RatPoly{1, 2, 1} == e.g);

    const LaurentPoly n = LaurentPoly::normalize(RatPoly{0, -2, 2, -2});
    CHECK(n.poly == RatPoly{1, -1, 1});
    CHECK(n.shift == 1);
    CHECK(a.to_string() == "t^2 - t + 1");
}

TEST_CASE("factorization over Q") {
    // (t - 1)^2 (t^2 - t + 1)^3 (t^2 - 3t + 1)
    const RatPoly p = RatPoly{-1, 1}.pow(2) * RatPoly{1, -1, 1}.pow(3) * RatPoly{1, -3, 1};
    const auto f = squarefree_factor_q(p);
    REQUIRE(f.size() == 3);
    int total = 0;
    for (const auto& fp : f) {
        total += fp.factor.degree() * fp.multiplicity;
        if (fp.factor == RatPoly{-1, 1}) CHECK(fp.multiplicity == 2);
        else if (fp.factor == RatPoly{1, -1, 1}) CHECK(fp.multiplicity == 3);
        else CHECK(fp.factor == RatPoly{1, -3, 1});
    }
    CHECK(total == p.degree());

    const RatPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    const auto lf = squarefree_factor_q(lehmer);
    REQUIRE(lf.size() == 1);
    CHECK(lf[0].factor == lehmer);

    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) splits although it has no rational root
    const auto sf = factor_squarefree_integer(RatPoly{4, 0, 0, 0, 1});
    CHECK(sf.size() == 2);

    CHECK(cyclotomic(6) == RatPoly{1, -1, 1});
    CHECK(cyclotomic(12) == RatPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_index(RatPoly{1, 1, 1, 1, 1}) == 5);
    CHECK(cyclotomic_index(RatPoly{1, -3, 1}) == 0);
    CHECK(euler_phi(35) == 24);
}

TEST_CASE("Bareiss determinant matches the cofactor expansion on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const RatMatrix m = testing::random_matrix(rng, n);
        CHECK(m.det() == cofactor_det(m));
        if (m.det() != 0) CHECK(m * m.inverse() == RatMatrix::identity(n));
        CHECK(m.rank() + m.kernel_matrix().cols() == n);
        CHECK((m * m.kernel_matrix()).is_zero());
    }
    CHECK_THROWS_AS((RatMatrix{{1, 2}, {2, 4}}).inverse(), std::domain_error);
}

TEST_CASE("characteristic polynomials agree with the sympy oracle") {
    for (const auto& row : testing::load_data("jordan_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const RatMatrix S = testing::matrix_of(row["seifert"]);
        const RatMatrix h = S.transpose().inverse() * S;
        CHECK(h.charpoly().primitive_part() == testing::poly_of(row["charpoly"]).primitive_part());
        // Cayley-Hamilton
        CHECK(h.eval_poly(h.charpoly()).is_zero());
    }
}

TEST_CASE("certified roots agree with the mpmath oracle") {
    const Precision prec{256};
    for (const auto& row : testing::load_data("roots_oracle.json")) {
        CAPTURE(row["name"].get<std::string>());
        const RatPoly f = testing::poly_of(row["coeffs"]);
        const auto roots = roots_certified(f, prec);
        REQUIRE(roots.size() == row["roots"].size());
        for (const auto& want : row["roots"]) {
            const BigComplex z{decimal(want["re"].get<std::string>(), prec), decimal(want["im"].get<std::string>(), prec)};
            auto hit = std::find_if(roots.begin(), roots.end(), [&](const CertifiedRoot& r) {
                return approx_equal(r.value, z, BigFloat::pow2(-100, prec));
            });
            REQUIRE(hit != roots.end());
            CHECK(std::string(to_string(hit->status)) == want["where"].get<std::string>());
        }
        for (const auto& r : roots) CHECK(r.radius < BigFloat::pow2(-100, prec));
    }
}

TEST_CASE("roots are ordered by argument within each factor") {
    const auto roots = roots_certified(RatPoly{1, 1, 1, 1, 1}, Precision{128});
    REQUIRE(roots.size() == 4);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].value.arg() < roots[i + 1].value.arg());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(roots[i].index == static_cast<int>(i));
}

TEST_CASE("number field arithmetic in Q(zeta_12)") {
    const NumberField K(cyclotomic(12));
    const auto x = K.generator();
    CHECK(K.pow(x, 12) == K.constant(1));
    CHECK(K.pow(x, 6) == K.constant(-1));
    CHECK(K.mul(x, K.conj(x)) == K.constant(1));
    const auto a = K.add(K.constant(2), K.mul(x, x));
    CHECK(K.mul(a, K.inv(a)) == K.constant(1));
    CHECK(K.conj(K.conj(a)) == a);

    const auto roots = roots_certified(cyclotomic(12), Precision{256});
    // x + 1/x = 2 cos(2 pi / 12) > 0 at the first root, omega is purely imaginary
    CHECK(K.certified_sign(K.add(x, K.conj(x)), roots[0]) == 1);
    CHECK(K.certified_sign(K.add(K.pow(x, 5), K.conj(K.pow(x, 5))), roots[0]) == -1);
}

TEST_CASE("hermitian diagonalization preserves inertia") {
    const NumberField K(cyclotomic(3));
    const auto x = K.generator();
    // G = (1 - x) S + (1 - 1/x) S^T for the trefoil matrix; zeta = e^{2 pi i/3} gives signature -2
    const RatMatrix S{{-1, 0}, {-1, -1}};
    FieldMatrix G(2, 2);
    const auto one_minus_x = K.sub(K.constant(1), x);
    const auto one_minus_xb = K.conj(one_minus_x);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            G(i, j) = K.add(K.mul(one_minus_x, K.constant(S(i, j))), K.mul(one_minus_xb, K.constant(S(j, i))));
    const auto d = hermitian_diagonal(K, G);
    const auto roots = roots_certified(cyclotomic(3), Precision{256});
    int sig = 0;
    for (const auto& e : d) {
        REQUIRE(K.conj(e) == e);
        if (!e.is_zero()) sig += *K.certified_sign(e, roots[0]);
    }
    CHECK(sig == -2);

    FieldMatrix bad(1, 2);
    bad = FieldMatrix(2, 2);
    bad(0, 1) = K.constant(1);
    CHECK_THROWS_AS(hermitian_diagonal(K, bad), std::logic_error);
}
