#include "supell/jacobian.hpp"

#include <cmath>

#include "supell/binary_form.hpp"
#include "supell/error.hpp"

namespace supell {

HyperCurve::HyperCurve(Poly f, Poly h)
{
    *this = unchecked(std::move(f), std::move(h));
    Poly disc_poly = f_.scaled(Scalar(field(), 4L)) + h_ * h_;
    if (discriminant(disc_poly).is_zero()) fail(Errc::singular, "the model y^2 + h y = f is singular");
}

HyperCurve HyperCurve::unchecked(Poly f, Poly h)
{
    HyperCurve C;
    if (!(f.field() == h.field())) fail(Errc::domain, "f and h over different fields");
    if (f.degree() < 3 || f.degree() % 2 == 0) fail(Errc::domain, "f must have odd degree 2g+1 >= 3");
    if (!f.is_monic()) fail(Errc::domain, "f must be monic");
    C.g_ = (f.degree() - 1) / 2;
    if (h.degree() > C.g_) fail(Errc::domain, "deg h must be at most g");
    C.f_ = std::move(f);
    C.h_ = std::move(h);
    return C;
}

MumfordDivisor MumfordDivisor::identity(Field F) { return {Poly::constant(Scalar(F, 1L)), Poly(F)}; }

const char* defect_name(MumfordDefect d)
{
    switch (d) {
    case MumfordDefect::none: return "valid";
    case MumfordDefect::not_monic: return "u is not monic";
    case MumfordDefect::bad_degrees: return "degrees violate deg v < deg u <= g";
    case MumfordDefect::not_divisible: return "u does not divide v^2 + v h - f";
    }
    return "?";
}

MumfordDefect mumford_check(const Poly& u, const Poly& v, const HyperCurve& C)
{
    if (!u.is_monic()) return MumfordDefect::not_monic;
    if (v.degree() >= u.degree() || u.degree() > C.genus()) return MumfordDefect::bad_degrees;
    if (!((v * v + v * C.h() - C.f()) % u).is_zero()) return MumfordDefect::not_divisible;
    return MumfordDefect::none;
}

MumfordDivisor mumford_validate(const Poly& u, const Poly& v, const HyperCurve& C)
{
    MumfordDefect d = mumford_check(u, v, C);
    if (d != MumfordDefect::none)
        fail(Errc::domain, std::string("invalid Mumford pair: condition (") + std::to_string(static_cast<int>(d)) + ") " +
                               defect_name(d));
    return {u, v};
}

JacobiTriple jacobi_polynomials(const HyperCurve& C, const std::vector<std::pair<Scalar, Scalar>>& points)
{
    Field F = C.field();
    if (!C.h().is_zero()) fail(Errc::unsupported, "Jacobi polynomials are built for h = 0");
    if (points.empty()) fail(Errc::domain, "need at least one point");
    Poly U = Poly::constant(Scalar(F, 1L));
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& [x, y] = points[i];
        if (!(y * y == C.f()(x))) fail(Errc::domain, "point is not on the curve");
        for (std::size_t j = 0; j < i; ++j)
            if (points[j].first == x) fail(Errc::domain, "repeated x-coordinate");
        U *= Poly(F, std::vector<Scalar>{-x, Scalar(F, 1L)});
    }
    Poly V = interpolate(points, F);
    Poly W = exact_div(C.f() - V * V, U);
    return {U, V, W};
}

namespace {

MumfordDivisor reduce(const HyperCurve& C, Poly u, Poly v)
{
    const Poly& f = C.f();
    const Poly& h = C.h();
    v = v % u;
    while (u.degree() > C.genus()) {
        Poly un = exact_div(f - v * h - v * v, u);
        v = (-h - v) % un;
        u = un;
    }
    u = u.monic();
    return {u, v % u};
}

}  // namespace

MumfordDivisor cantor_add(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b)
{
    Field F = C.field();
    if (!(a.u.field() == F) || !(b.u.field() == F)) fail(Errc::domain, "divisor over a different field");
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    Poly e1, e2;
    Poly d1 = xgcd(a.u, b.u, e1, e2);
    Poly c1, c2;
    Poly d = xgcd(d1, a.v + b.v + C.h(), c1, c2);
    Poly s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
    Poly u = exact_div(a.u * b.u, d * d);
    Poly v = exact_div(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + C.f()), d) % u;
    return reduce(C, u, v);
}

MumfordDivisor negate(const HyperCurve& C, const MumfordDivisor& a)
{
    if (a.is_identity()) return a;
    return {a.u, (-C.h() - a.v) % a.u};
}

MumfordDivisor scalar_mul(const HyperCurve& C, const mpz_class& k, const MumfordDivisor& a, std::size_t max_bits)
{
    Field F = C.field();
    MumfordDivisor base = k < 0 ? negate(C, a) : a;
    mpz_class e = abs(k);
    MumfordDivisor acc = MumfordDivisor::identity(F);
    auto check = [&](const MumfordDivisor& D) {
        if (!F.is_rational()) return;
        for (const Poly* p : {&D.u, &D.v})
            for (auto& c : p->coeffs())
                if (mpz_sizeinbase(c.rational().get_num_mpz_t(), 2) > max_bits ||
                    mpz_sizeinbase(c.rational().get_den_mpz_t(), 2) > max_bits)
                    fail(Errc::domain, "coefficient height cap exceeded in scalar multiplication");
    };
    std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = cantor_add(C, acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = cantor_add(C, acc, base);
        check(acc);
    }
    return acc;
}

InterpolationSum interpolation_add_g2(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b)
{
    Field F = C.field();
    InterpolationSum out;
    auto fallback = [&] {
        out.sum = cantor_add(C, a, b);
        out.fallback = true;
        return out;
    };
    if (C.genus() != 2 || !C.h().is_zero()) return fallback();
    if (a.u.degree() != 2 || b.u.degree() != 2) return fallback();
    if (gcd(a.u, b.u).degree() != 0) return fallback();
    if (gcd(a.u, a.u.derivative()).degree() != 0 || gcd(b.u, b.u.derivative()).degree() != 0) return fallback();
    // Cubic through the four points: g = v1 mod u1, g = v2 mod u2.
    Poly s, t;
    xgcd(a.u, b.u, s, t);
    Poly prod = a.u * b.u;
    Poly g = (a.v * t * b.u + b.v * s * a.u) % prod;
    if (g.degree() != 3) return fallback();
    Poly residual = exact_div(g * g - C.f(), prod);
    Poly u3 = residual.monic();
    Poly v3 = (-g) % u3;
    out.sum = reduce(C, u3, v3);
    // x5 + x6 and x5 x6 against the coefficients of g and f.
    Scalar b0 = g.coeff(3), b1 = g.coeff(2), b3 = g.coeff(0);
    Scalar sum4 = -(a.u.coeff(1) + b.u.coeff(1));
    Scalar prod4 = a.u.coeff(0) * b.u.coeff(0);
    Scalar sum56 = -u3.coeff(1), prod56 = u3.coeff(0);
    Scalar b02 = b0 * b0;
    bool sum_ok = sum56 == (C.f().coeff(5) - Scalar(F, 2L) * b0 * b1) / b02 - sum4;
    bool prod_ok = prod56 * b02 * prod4 == b3 * b3 - C.f().coeff(0);
    out.vieta_ok = sum_ok && prod_ok;
    return out;
}

namespace {

// GF(p^2) = GF(p)[w]/(w^2 - nr)
struct Fq2 {
    std::uint64_t p, nr;
    struct El {
        std::uint64_t a, b;
    };
    El mul(El x, El y) const
    {
        std::uint64_t re = (mulmod(x.a, y.a, p) + mulmod(mulmod(x.b, y.b, p), nr, p)) % p;
        std::uint64_t im = (mulmod(x.a, y.b, p) + mulmod(x.b, y.a, p)) % p;
        return {re, im};
    }
    El add(El x, El y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    El pow(El x, std::uint64_t e) const
    {
        El r{1 % p, 0};
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    // 1 + chi(z) solutions of y^2 = z
    int roots(El z) const
    {
        if (z.a == 0 && z.b == 0) return 1;
        // Norm map: z is a square in GF(p^2) iff its norm is a square in GF(p), and every element of GF(p) is a square.
        std::uint64_t norm = (mulmod(z.a, z.a, p) + p - mulmod(mulmod(z.b, z.b, p), nr, p)) % p;
        return powmod(norm, (p - 1) / 2, p) == 1 ? 2 : 0;
    }
};

}  // namespace

JacobianCount jacobian_order_g2(const HyperCurve& C)
{
    Field F = C.field();
    if (F.is_rational()) fail(Errc::domain, "group order needs a finite field");
    if (C.genus() != 2) fail(Errc::unsupported, "group order is implemented for genus 2");
    std::uint64_t p = F.characteristic();
    if (p > (1u << 20)) fail(Errc::unsupported, "point counting over GF(p^2) is exhaustive; p too large");
    // y^2 + h y = f  <=>  (2y + h)^2 = D with D = 4f + h^2
    Poly D = C.f().scaled(Scalar(F, 4L)) + C.h() * C.h();
    std::vector<std::uint64_t> dc;
    for (auto& c : D.coeffs()) dc.push_back(c.residue());
    JacobianCount out;
    out.q = p;
    std::uint64_t n1 = 1;  // one point at infinity for odd degree
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (auto it = dc.rbegin(); it != dc.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
        n1 += acc == 0 ? 1 : (powmod(acc, (p - 1) / 2, p) == 1 ? 2 : 0);
    }
    std::uint64_t nr = 2;
    while (powmod(nr, (p - 1) / 2, p) == 1) ++nr;
    Fq2 K{p, nr};
    std::uint64_t n2 = 1;
    for (std::uint64_t xa = 0; xa < p; ++xa) {
        for (std::uint64_t xb = 0; xb < p; ++xb) {
            Fq2::El x{xa, xb}, acc{0, 0};
            for (auto it = dc.rbegin(); it != dc.rend(); ++it) acc = K.add(K.mul(acc, x), {*it, 0});
            n2 += static_cast<std::uint64_t>(K.roots(acc));
        }
    }
    out.n1 = n1;
    out.n2 = n2;
    mpz_class q(static_cast<unsigned long>(p));
    out.a = q + 1 - mpz_class(static_cast<unsigned long>(n1));
    mpz_class s2 = q * q + 1 - mpz_class(static_cast<unsigned long>(n2));
    mpz_class e2 = (out.a * out.a - s2) / 2;
    out.b = e2 - 2 * q;
    out.order = 1 - out.a + e2 - out.a * q + q * q;
    double sq = std::sqrt(static_cast<double>(p));
    double lo = std::pow(sq - 1, 4), hi = std::pow(sq + 1, 4);
    out.in_hasse_interval = out.order.get_d() >= lo && out.order.get_d() <= hi;
    return out;
}

std::vector<MumfordDivisor> enumerate_divisors(const HyperCurve& C)
{
    Field F = C.field();
    if (F.is_rational()) fail(Errc::domain, "enumeration needs a finite field");
    std::uint64_t p = F.characteristic();
    int g = C.genus();
    if (g > 2 || p > 200) fail(Errc::unsupported, "exhaustive enumeration limited to genus <= 2, p <= 200");
    std::vector<MumfordDivisor> out{MumfordDivisor::identity(F)};
    auto S = [&](std::uint64_t v) { return Scalar(F, mpz_class(static_cast<unsigned long>(v))); };
    // Each monic u of degree <= g, each v of degree < deg u.
    for (int du = 1; du <= g; ++du) {
        std::uint64_t nu = 1, nv = 1;
        for (int i = 0; i < du; ++i) {
            nu *= p;
            nv *= p;
        }
        for (std::uint64_t ui = 0; ui < nu; ++ui) {
            std::vector<Scalar> uc;
            std::uint64_t r = ui;
            for (int i = 0; i < du; ++i) {
                uc.push_back(S(r % p));
                r /= p;
            }
            uc.push_back(Scalar(F, 1L));
            Poly u(F, uc);
            for (std::uint64_t vi = 0; vi < nv; ++vi) {
                std::vector<Scalar> vc;
                std::uint64_t s = vi;
                for (int i = 0; i < du; ++i) {
                    vc.push_back(S(s % p));
                    s /= p;
                }
                Poly v(F, vc);
                if (((v * v + v * C.h() - C.f()) % u).is_zero()) out.push_back({u, v});
            }
        }
    }
    return out;
}

}  // namespace supell
