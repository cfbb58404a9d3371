#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "supell/scalar.hpp"

namespace supell {

// A class under lambda * (x_i) = (lambda^{q_i} x_i).
struct WeightedPoint {
    std::vector<Scalar> coords;
    std::vector<int> weights;

    WeightedPoint() = default;
    WeightedPoint(std::vector<Scalar> c, std::vector<int> w);

    const Field& field() const { return coords.front().field(); }
    std::size_t size() const { return coords.size(); }
    std::string str() const;
    friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

WeightedPoint star_act(const Scalar& lambda, const WeightedPoint& p);

// Largest m >= 1 with m^{q_i} | x_i for all i. Coordinates must be integers.
mpz_class wgcd(const WeightedPoint& p);

// Same as wgcd but with the weights replaced.
mpz_class wgcd(const WeightedPoint& p, const std::vector<int>& weights);

// Integral, wgcd 1, first nonzero odd-weight coordinate positive. Q only.
WeightedPoint normalize(const WeightedPoint& p);

// max |x_j|^{1/q_j} on the normalized representative, kept as radicand^{1/root}.
struct Height {
    mpz_class radicand;
    int root = 1;
    double approx = 1.0;
};

Height weighted_height(const WeightedPoint& p);

// a^{1/q} <= b^{1/r} without floating point.
bool height_le(const Height& a, const Height& b);
bool height_le(const Height& h, const mpq_class& bound);

// lambda with star_act(lambda, p) == q, if it exists in the base field.
std::optional<Scalar> wpoint_equal(const WeightedPoint& p, const WeightedPoint& q);

// One normalized representative per class over Q with height <= bound.
std::vector<WeightedPoint> enumerate_bounded_height(const std::vector<int>& weights, const mpq_class& bound);

}  // namespace supell
