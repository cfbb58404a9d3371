#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "supell/curve.hpp"
#include "supell/weighted.hpp"

namespace supell {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct EllipticModel {
    mpz_class a1, a2, a3, a4, a6;
    friend bool operator==(const EllipticModel&, const EllipticModel&) = default;
};

// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t
struct WeierstrassChange {
    mpq_class u = 1, r = 0, s = 0, t = 0;
};

struct PrimeValuations {
    mpz_class prime;
    unsigned before = 0, after = 0;
};

struct EllipticReduction {
    EllipticModel model;
    WeierstrassChange change;
    mpz_class disc_before, disc_after;
    std::vector<PrimeValuations> valuations;  // of the discriminant
};

std::pair<mpz_class, mpz_class> c4c6(const EllipticModel& E);
mpz_class discriminant(const EllipticModel& E);

// Throws domain if the image is not integral.
EllipticModel apply_change(const EllipticModel& E, const WeierstrassChange& w);

EllipticReduction laska_reduce(const EllipticModel& E);

struct MinimalTupleCheck {
    bool minimal = true;
    std::vector<mpz_class> offending;  // primes dividing the wgcd for weights d q_i / 2
};

MinimalTupleCheck is_minimal_tuple(const WeightedPoint& p, int d);

struct SuperellipticReduction {
    SuperellipticCurve curve;
    mpz_class lambda;
    bool isomorphism = true;  // n | d; otherwise the change is a twist
    bool integral = true;     // reduced f has integral coefficients
    WeightedPoint before, after;  // invariant tuples used for the reduction
    std::vector<int> scaled_weights;
    struct Row {
        mpz_class prime;
        std::vector<unsigned> before, after;  // valuations per coordinate (0 for zero coordinates)
    };
    std::vector<Row> valuations;
};

// Tuple whose weighted gcd drives the reduction: integral invariants for sextics, J2..J7 for octavics.
WeightedPoint reduction_tuple(const SuperellipticCurve& C);

SuperellipticReduction superelliptic_minimal(const SuperellipticCurve& C);

}  // namespace supell
