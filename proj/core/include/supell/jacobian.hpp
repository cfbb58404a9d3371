#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "supell/poly.hpp"

namespace supell {

// y^2 + h(x) y = f(x), f monic of degree 2g+1, deg h <= g.
class HyperCurve {
public:
    HyperCurve(Poly f, Poly h);
    explicit HyperCurve(Poly f) : HyperCurve(f, Poly(f.field())) {}
    // Skips the smoothness check; only for demonstrating what goes wrong on singular models.
    static HyperCurve unchecked(Poly f, Poly h);

    const Poly& f() const { return f_; }
    const Poly& h() const { return h_; }
    int genus() const { return g_; }
    const Field& field() const { return f_.field(); }
    friend bool operator==(const HyperCurve&, const HyperCurve&) = default;

private:
    HyperCurve() = default;
    Poly f_, h_;
    int g_ = 0;
};

struct MumfordDivisor {
    Poly u, v;
    static MumfordDivisor identity(Field F);
    bool is_identity() const { return u.degree() == 0; }
    friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

enum class MumfordDefect { none = 0, not_monic = 1, bad_degrees = 2, not_divisible = 3 };
const char* defect_name(MumfordDefect d);

MumfordDefect mumford_check(const Poly& u, const Poly& v, const HyperCurve& C);
// Throws domain naming the failing condition.
MumfordDivisor mumford_validate(const Poly& u, const Poly& v, const HyperCurve& C);

struct JacobiTriple {
    Poly U, V, W;
};

// h = 0 models only; x-coordinates pairwise distinct.
JacobiTriple jacobi_polynomials(const HyperCurve& C, const std::vector<std::pair<Scalar, Scalar>>& points);

MumfordDivisor cantor_add(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor negate(const HyperCurve& C, const MumfordDivisor& a);
// Over Q the computation stops with a domain error once a coefficient exceeds max_bits.
MumfordDivisor scalar_mul(const HyperCurve& C, const mpz_class& k, const MumfordDivisor& a, std::size_t max_bits = 1 << 14);

struct InterpolationSum {
    MumfordDivisor sum;
    bool fallback = false;
    bool vieta_ok = false;  // the new abscissae satisfy the sum/product relations of the cubic
};

InterpolationSum interpolation_add_g2(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b);

struct JacobianCount {
    std::uint64_t q = 0;
    std::uint64_t n1 = 0, n2 = 0;
    mpz_class a, b, order;
    bool in_hasse_interval = false;
};

JacobianCount jacobian_order_g2(const HyperCurve& C);

// Every reduced divisor over the prime field (small p).
std::vector<MumfordDivisor> enumerate_divisors(const HyperCurve& C);

}  // namespace supell
