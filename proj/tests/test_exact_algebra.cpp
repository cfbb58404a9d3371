#include <doctest.h>

#include "supell/binary_form.hpp"
#include "supell/error.hpp"
#include "supell/integer.hpp"
#include "support.hpp"

using namespace supell;
using namespace testing_support;

TEST_SUITE("exact_algebra") {

TEST_CASE("scalar arithmetic over Q and GF(p)")
{
    Field Q = Field::rationals();
    Scalar a = Scalar::parse(Q, "3/7"), b = Scalar::parse(Q, "-2/5");
    CHECK((a + b).str() == "1/35");
    CHECK((a / b).str() == "-15/14");
    Field F = Field::prime(101);
    Scalar x(F, 37L);
    CHECK((x * x.inverse()).is_one());
    CHECK(Scalar(F, -1L).residue() == 100);
    CHECK(Scalar::parse(F, "1/2").residue() == 51);
    CHECK_THROWS_AS(Scalar(Q, 1L) + Scalar(F, 1L), Error);
    CHECK_THROWS_AS(Field::prime(91), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), Error);
    CHECK(Field::parse("GF(7)") == Field::prime(7));
    CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("integer helpers")
{
    auto fs = factor(mpz_class(360));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == 2);
    CHECK(fs[0].second == 3);
    mpz_class big("1000000016000000063");  // 1000000007 * 1000000009
    auto fb = factor(big);
    REQUIRE(fb.size() == 2);
    CHECK(fb[0].first == 1000000007);
    CHECK(divisors(mpz_class(12)).size() == 6);
    mpz_class r;
    CHECK(exact_root(mpz_class(-27), 3, r));
    CHECK(r == -3);
    CHECK_FALSE(exact_root(mpz_class(12), 2, r));
}

TEST_CASE("polynomial division, gcd and resultant")
{
    Field Q = Field::rationals();
    Poly f(Q, {-1, 0, 1});  // x^2 - 1
    Poly g(Q, {1, 1});      // x + 1
    CHECK(exact_div(f, g) == Poly(Q, {-1, 1}));
    CHECK(gcd(f, Poly(Q, {1, 2, 1})) == g);
    Poly s, t;
    Poly d = xgcd(Poly(Q, {1, 0, 1}), Poly(Q, {0, 1}), s, t);
    CHECK(d.degree() == 0);
    CHECK(s * Poly(Q, {1, 0, 1}) + t * Poly(Q, {0, 1}) == d);
    // Res(x^2 - 1, 2x) = -4
    CHECK(resultant(f, f.derivative()) == Scalar(Q, -4L));
}

TEST_CASE("squarefree decomposition and roots mod p")
{
    Field Q = Field::rationals();
    Poly f = Poly(Q, {0, 1});
    f = f * f * f * Poly(Q, {1, 1}) * Poly(Q, {1, 0, 1});
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[1].second == 3);
    Field F = Field::prime(101);
    Poly h(F, {-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    auto rs = roots_mod_p(h, seed());
    REQUIRE(rs.size() == 3);
    CHECK(rs[2].residue() == 3);
}

TEST_CASE("transvectant examples")
{
    Field Q = Field::rationals();
    BinaryForm X(Q, {1, 0}), Y(Q, {0, 1});
    CHECK(transvectant(X, Y, 0) == BinaryForm(Q, {0, 1, 0}));
    BinaryForm xy(Q, {0, 1, 0});
    CHECK(transvectant(xy, xy, 2).value() == Scalar::parse(Q, "-1/2"));
    // quadratic: 2 a0 a2 - a1^2 / 2
    for (int t = 0; t < 20; ++t) {
        BinaryForm q = rand_form(Q, 2);
        Scalar expect = Scalar(Q, 2L) * q[0] * q[2] - q[1] * q[1] / Scalar(Q, 2L);
        CHECK(transvectant(q, q, 2).value() == expect);
    }
    CHECK_THROWS_AS(transvectant(xy, X, 2), Error);
    Field F5 = Field::prime(5);
    BinaryForm s(F5, {1, 0, 0, 0, 0, 0, 1});
    try {
        transvectant(s, s, 2);
        FAIL("expected characteristic error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::characteristic);
    }
}

TEST_CASE("transvectant bilinearity and symmetry")
{
    for (Field F : {Field::rationals(), Field::prime(10007)}) {
        for (int t = 0; t < 25; ++t) {
            int m = static_cast<int>(uniform(2, 6)), n = static_cast<int>(uniform(2, 6));
            int r = static_cast<int>(uniform(0, std::min(m, n)));
            BinaryForm f = rand_form(F, m), g = rand_form(F, m), h = rand_form(F, n);
            Scalar alpha = rand_scalar(F, -7, 7);
            CHECK(transvectant(alpha * f + g, h, r) == alpha * transvectant(f, h, r) + transvectant(g, h, r));
            BinaryForm fh = transvectant(f, h, r), hf = transvectant(h, f, r);
            CHECK(fh == (r % 2 ? Scalar(F, -1L) : Scalar(F, 1L)) * hf);
        }
    }
}

TEST_CASE("substitution examples and composition order")
{
    Field Q = Field::rationals();
    BinaryForm x3(Q, {1, 0, 0, 0});
    CHECK(substitute(x3, Mat2::identity(Q)) == x3);
    Mat2 dl{Scalar(Q, 5L), Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, 1L)};
    CHECK(substitute(x3, dl) == BinaryForm(Q, {125, 0, 0, 0}));
    Mat2 swap{Scalar(Q, 0L), Scalar(Q, 1L), Scalar(Q, 1L), Scalar(Q, 0L)};
    CHECK(substitute(BinaryForm(Q, {0, 1, 0, 0}), swap) == BinaryForm(Q, {0, 0, 1, 0}));
    Mat2 sing{Scalar(Q, 1L), Scalar(Q, 2L), Scalar(Q, 2L), Scalar(Q, 4L)};
    CHECK_THROWS_AS(substitute(x3, sing), Error);
    // Regression lock: composition is substitute(f, M * N).
    BinaryForm f(Q, {1, 2, 0, -1});
    Mat2 M{Scalar(Q, 1L), Scalar(Q, 1L), Scalar(Q, 0L), Scalar(Q, 1L)};
    Mat2 N{Scalar(Q, 2L), Scalar(Q, 0L), Scalar(Q, 1L), Scalar(Q, 1L)};
    CHECK(substitute(substitute(f, M), N) == substitute(f, M * N));
    CHECK_FALSE(substitute(substitute(f, M), N) == substitute(f, N * M));
    for (int t = 0; t < 30; ++t) {
        BinaryForm g = rand_form(Q, static_cast<int>(uniform(1, 7)));
        Mat2 A = rand_mat(Q), B = rand_mat(Q);
        CHECK(substitute(substitute(g, A), B) == substitute(g, A * B));
    }
}

TEST_CASE("discriminant normalization and covariance")
{
    Field Q = Field::rationals();
    CHECK(discriminant(BinaryForm(Q, {1, 0, -1})) == Scalar(Q, 4L));
    CHECK_FALSE(discriminant(BinaryForm(Q, {0, 1, -1, 0})).is_zero());
    CHECK(discriminant(BinaryForm(Q, {0, 1, 0, 0})).is_zero());
    CHECK(discriminant(BinaryForm(Q, {0, 1, 0})) == Scalar(Q, 1L));
    BinaryForm quartic(Q, {1, -2, 3, 0, 5});
    Mat2 d2{Scalar(Q, 2L), Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, 1L)};
    CHECK(discriminant(substitute(quartic, d2)) == Scalar(Q, 4096L) * discriminant(quartic));
    for (Field F : {Field::rationals(), Field::prime(101)}) {
        for (int t = 0; t < 30; ++t) {
            int d = static_cast<int>(uniform(2, 8));
            BinaryForm f = rand_form(F, d);
            Mat2 M = rand_mat(F);
            CHECK(discriminant(substitute(f, M)) == M.det().pow(static_cast<long>(d * (d - 1))) * discriminant(f));
        }
    }
}

TEST_CASE("discriminant vanishes exactly on forms with a common zero of the partials")
{
    Field Q = Field::rationals();
    for (int t = 0; t < 200; ++t) {
        int d = static_cast<int>(uniform(2, 6));
        BinaryForm f = uniform(0, 1) ? rand_form(Q, d, -2, 2)
                                      : form_from_roots(Q, {uniform(-2, 2), uniform(-2, 2)}) * rand_form(Q, d - 2, -2, 2);
        if (f.is_zero()) continue;
        // gcd(f, f_X, f_Y) as polynomials in x, plus the root at infinity.
        Poly fx = f.partial(1, 0).dehomogenize(), fy = f.partial(0, 1).dehomogenize();
        Poly g = gcd(gcd(f.dehomogenize(), fx), fy);
        bool double_at_infinity = f[0].is_zero() && f[1].is_zero();
        bool repeated = g.degree() > 0 || double_at_infinity;
        CHECK(discriminant(f).is_zero() == repeated);
    }
}

}
