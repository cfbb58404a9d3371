#include <doctest.h>

#include "supell/binary_form.hpp"
#include "supell/error.hpp"
#include "supell/integer.hpp"
#include "supell/invariants.hpp"
#include "supell/minimal.hpp"
#include "support.hpp"

using namespace supell;
using namespace testing_support;

namespace {

Field Q = Field::rationals();

EllipticModel rand_model()
{
    for (;;) {
        EllipticModel E{uniform(-3, 3), uniform(-5, 5), uniform(-5, 5), uniform(-40, 40), uniform(-80, 80)};
        if (discriminant(E) != 0) return E;
    }
}

// Planted model: u-scaled copy of E followed by a random integral translation.
EllipticModel plant(const EllipticModel& E, long u)
{
    EllipticModel big = apply_change(E, {mpq_class(1, u), 0, 0, 0});
    return apply_change(big, {1, uniform(-4, 4), uniform(-4, 4), uniform(-4, 4)});
}

}  // namespace

TEST_SUITE("minimal_models") {

TEST_CASE("c4 and c6")
{
    for (long a : {-3L, 0L, 7L})
        for (long b : {-2L, 1L, 5L}) {
            auto [c4, c6] = c4c6({0, 0, 0, a, b});
            CHECK(c4 == -48 * a);
            CHECK(c6 == -864 * b);
        }
    auto [c4, c6] = c4c6({0, 0, 0, 0, 1});
    CHECK(c4 == 0);
    CHECK(c6 == -864);
    for (int t = 0; t < 100; ++t) {
        EllipticModel E = rand_model();
        auto [x, y] = c4c6(E);
        CHECK(x * x * x - y * y == 1728 * discriminant(E));
    }
}

TEST_CASE("reduction of y^2 + y = x^3 - x^2")
{
    EllipticModel E{0, -1, 1, 0, 0};
    CHECK(discriminant(E) == -11);
    auto [c4, c6] = c4c6(E);
    CHECK(c4 == 16);
    CHECK(c6 == -152);
    EllipticReduction r = laska_reduce(E);
    CHECK(r.change.u == 1);
    CHECK(r.model == E);
    CHECK_THROWS_AS(laska_reduce({0, 0, 0, 0, 0}), Error);
}

TEST_CASE("reduction is idempotent and canonical")
{
    for (int t = 0; t < 60; ++t) {
        EllipticModel E = rand_model();
        EllipticReduction r = laska_reduce(E);
        CHECK(apply_change(E, r.change) == r.model);
        CHECK(r.model.a1 >= 0);
        CHECK(r.model.a1 <= 1);
        CHECK(r.model.a3 >= 0);
        CHECK(r.model.a3 <= 1);
        CHECK(abs(r.model.a2) <= 1);
        EllipticReduction again = laska_reduce(r.model);
        CHECK(again.change.u == 1);
        CHECK(again.model == r.model);
        mpz_class u = r.change.u.get_num();
        CHECK(r.disc_before == pow(u, 12) * r.disc_after);
        for (long s : {2L, 3L, 6L}) {
            EllipticReduction p = laska_reduce(plant(r.model, s));
            CHECK(p.change.u == s);
            CHECK(p.model == r.model);
        }
    }
}

TEST_CASE("minimal tuple check")
{
    WeightedPoint units({Scalar(Q, 1L), Scalar(Q, -1L), Scalar(Q, 1L), Scalar(Q, 1L)}, {2, 4, 6, 10});
    CHECK(is_minimal_tuple(units, 6).minimal);
    WeightedPoint bad = star_act(Scalar(Q, 2L), star_act(Scalar(Q, 2L), star_act(Scalar(Q, 2L), units)));
    auto c = is_minimal_tuple(bad, 6);
    CHECK_FALSE(c.minimal);
    REQUIRE(c.offending.size() == 1);
    CHECK(c.offending[0] == 2);
}

TEST_CASE("superelliptic minimal model round trip")
{
    int done = 0;
    for (int t = 0; t < 40; ++t) {
        int d = t % 2 ? 8 : 6;
        BinaryForm g = rand_form(Q, d, -4, 4);
        if (discriminant(g).is_zero()) continue;
        SuperellipticCurve Cg(2, g.dehomogenize());
        if (wgcd(reduction_tuple(Cg), [&] {
                std::vector<int> w;
                for (int q : reduction_tuple(Cg).weights) w.push_back(d * q / 2);
                return w;
            }()) != 1)
            continue;
        long lam = uniform(0, 1) ? 2 : 3;
        Mat2 M{Scalar(Q, 1L), Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, lam)};
        SuperellipticCurve Cf(2, substitute(g, M).dehomogenize());
        SuperellipticReduction r = superelliptic_minimal(Cf);
        CHECK(r.lambda == lam);
        CHECK(r.curve.f == Cg.f);
        CHECK(r.integral);
        CHECK(r.isomorphism);
        std::vector<int> w = r.scaled_weights;
        WeightedPoint expect = r.before;
        for (std::size_t i = 0; i < w.size(); ++i) expect.coords[i] = expect.coords[i] / Scalar(Q, lam).pow(static_cast<long>(w[i]));
        CHECK(expect == r.after);
        CHECK(is_minimal_tuple(WeightedPoint(r.after.coords, r.after.weights), d).minimal);
        ++done;
    }
    CHECK(done >= 20);
    SuperellipticCurve already(2, Poly(Q, {1, 0, 0, 0, 0, 1, 1}));
    auto r = superelliptic_minimal(already);
    CHECK(r.lambda == 1);
    CHECK(r.curve.f == already.f);
    CHECK_THROWS_AS(superelliptic_minimal(SuperellipticCurve(3, Poly(Q, {1, 0, 0, 0, 1}))), Error);
}

}
