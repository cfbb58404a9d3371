#include "supell/minimal.hpp"

#include <algorithm>

#include "supell/binary_form.hpp"
#include "supell/error.hpp"
#include "supell/integer.hpp"
#include "supell/invariants.hpp"

namespace supell {

namespace {

struct BInv {
    mpz_class b2, b4, b6;
};

BInv binv(const mpz_class& a1, const mpz_class& a2, const mpz_class& a3, const mpz_class& a4, const mpz_class& a6)
{
    return {a1 * a1 + 4 * a2, a1 * a3 + 2 * a4, a3 * a3 + 4 * a6};
}

mpz_class mod(const mpz_class& a, long m)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mpz_class(m).get_mpz_t());
    return r;
}

bool divides_exact(const mpz_class& num, long den, mpz_class& out)
{
    if (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den)) == 0) return false;
    mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
    return true;
}

bool to_integer(const mpq_class& q, mpz_class& out)
{
    if (q.get_den() != 1) return false;
    out = q.get_num();
    return true;
}

// Integral model with the given c4, c6 and a1 in {0,1}, a2 in {-1,0,1}, a3 in {0,1}, if any.
bool canonical_model(const mpz_class& c4, const mpz_class& c6, EllipticModel& out)
{
    mpz_class a1 = mod(c4, 8) == 1 ? 1 : 0;
    if (mod(c4, 8) != a1) return false;
    mpz_class a2;
    bool found = false;
    for (long cand : {-1L, 0L, 1L}) {
        mpz_class lhs = cand * cand * cand, rhs = -(a1 * a1 * a1 * a1 * a1 * a1) - c6;
        if (mod(lhs - rhs, 3) == 0) {
            a2 = cand;
            found = true;
            break;
        }
    }
    if (!found) return false;
    mpz_class b2 = a1 * a1 + 4 * a2, b4, b6;
    if (!divides_exact(b2 * b2 - c4, 24, b4)) return false;
    if (!divides_exact(-b2 * b2 * b2 + 36 * b2 * b4 - c6, 216, b6)) return false;
    mpz_class r4 = mod(b6, 4);
    if (r4 != 0 && r4 != 1) return false;
    mpz_class a3 = r4, a4, a6;
    if (!divides_exact(b4 - a1 * a3, 2, a4)) return false;
    if (!divides_exact(b6 - a3 * a3, 4, a6)) return false;
    out = {a1, a2, a3, a4, a6};
    return true;
}

}  // namespace

std::pair<mpz_class, mpz_class> c4c6(const EllipticModel& E)
{
    BInv b = binv(E.a1, E.a2, E.a3, E.a4, E.a6);
    return {b.b2 * b.b2 - 24 * b.b4, -b.b2 * b.b2 * b.b2 + 36 * b.b2 * b.b4 - 216 * b.b6};
}

mpz_class discriminant(const EllipticModel& E)
{
    auto [c4, c6] = c4c6(E);
    mpz_class d = c4 * c4 * c4 - c6 * c6;
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 1728);
    return d;
}

EllipticModel apply_change(const EllipticModel& E, const WeierstrassChange& w)
{
    if (w.u == 0) fail(Errc::domain, "u must be nonzero");
    mpq_class a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4, a6 = E.a6;
    const mpq_class &u = w.u, &r = w.r, &s = w.s, &t = w.t;
    mpq_class u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    mpq_class n1 = (a1 + 2 * s) / u;
    mpq_class n2 = (a2 - s * a1 + 3 * r - s * s) / u2;
    mpq_class n3 = (a3 + r * a1 + 2 * t) / u3;
    mpq_class n4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
    mpq_class n6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
    EllipticModel out;
    if (!to_integer(n1, out.a1) || !to_integer(n2, out.a2) || !to_integer(n3, out.a3) || !to_integer(n4, out.a4) ||
        !to_integer(n6, out.a6))
        fail(Errc::domain, "change of variables leaves the integral models");
    return out;
}

EllipticReduction laska_reduce(const EllipticModel& E)
{
    mpz_class disc = discriminant(E);
    if (disc == 0) fail(Errc::singular, "singular Weierstrass model");
    auto [c4, c6] = c4c6(E);
    // u^4 | c4 and u^6 | c6 bound the search.
    mpz_class g = 0;
    mpz_gcd(g.get_mpz_t(), c4.get_mpz_t(), c6.get_mpz_t());
    mpz_class umax = 1;
    for (auto& [p, e] : factor(g)) {
        (void)e;
        unsigned k = ~0u;
        if (c4 != 0) k = std::min(k, valuation(c4, p) / 4);
        if (c6 != 0) k = std::min(k, valuation(c6, p) / 6);
        umax *= pow(p, k);
    }
    auto divs = divisors(umax);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const mpz_class& u = *it;
        mpz_class c4p = c4 / pow(u, 4), c6p = c6 / pow(u, 6);
        EllipticModel M;
        if (!canonical_model(c4p, c6p, M)) continue;
        mpq_class s = mpq_class(u * M.a1 - E.a1, 2);
        mpq_class r = (mpq_class(u * u * M.a2 - E.a2) + s * mpq_class(E.a1) + s * s) / 3;
        mpq_class t = (mpq_class(u * u * u * M.a3 - E.a3) - r * mpq_class(E.a1)) / 2;
        s.canonicalize();
        r.canonicalize();
        t.canonicalize();
        if (s.get_den() != 1 || r.get_den() != 1 || t.get_den() != 1) continue;
        WeierstrassChange w{mpq_class(u), r, s, t};
        if (!(apply_change(E, w) == M)) fail(Errc::domain, "internal: change does not replay");
        EllipticReduction out{M, w, disc, discriminant(M), {}};
        for (auto& [p, e] : factor(disc))
            out.valuations.push_back({p, e, out.disc_after == 0 ? 0u : valuation(out.disc_after, p)});
        return out;
    }
    fail(Errc::domain, "no integral reduction found");
}

MinimalTupleCheck is_minimal_tuple(const WeightedPoint& p, int d)
{
    std::vector<int> w;
    for (int q : p.weights) {
        if ((d * q) % 2) fail(Errc::domain, "d q_i / 2 must be integral");
        w.push_back(d * q / 2);
    }
    MinimalTupleCheck out;
    mpz_class g = wgcd(p, w);
    if (g != 1) {
        out.minimal = false;
        for (auto& [prime, e] : factor(g)) {
            (void)e;
            out.offending.push_back(prime);
        }
    }
    return out;
}

WeightedPoint reduction_tuple(const SuperellipticCurve& C)
{
    BinaryForm f = curve_form(C);
    if (discriminant(f).is_zero()) fail(Errc::singular, "zero discriminant");
    if (f.degree() == 6) return sextic_integral_point(igusa_sextic(f));
    return octavic_point(octavic_invariants(f));
}

SuperellipticReduction superelliptic_minimal(const SuperellipticCurve& C)
{
    if (!C.field().is_rational()) fail(Errc::unsupported, "minimal models are computed over Q");
    for (auto& c : C.f.coeffs())
        if (!c.is_integer()) fail(Errc::domain, "minimal model needs integral coefficients");
    BinaryForm f = curve_form(C);
    int d = f.degree();
    SuperellipticReduction out;
    out.before = reduction_tuple(C);
    for (int q : out.before.weights) out.scaled_weights.push_back(d * q / 2);
    out.lambda = wgcd(out.before, out.scaled_weights);
    Field Q = C.field();
    Mat2 M{Scalar(Q, 1L), Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, mpq_class(1, out.lambda))};
    BinaryForm g = substitute(f, M);
    Poly reduced = g.dehomogenize();
    out.curve = SuperellipticCurve(C.n, reduced);
    out.after = reduction_tuple(out.curve);
    out.isomorphism = d % C.n == 0;
    out.integral = std::all_of(reduced.coeffs().begin(), reduced.coeffs().end(), [](const Scalar& c) { return c.is_integer(); });
    if (out.lambda != 1) {
        for (auto& [prime, e] : factor(out.lambda)) {
            (void)e;
            SuperellipticReduction::Row row{prime, {}, {}};
            for (std::size_t i = 0; i < out.before.size(); ++i) {
                auto val = [&](const Scalar& x) -> unsigned {
                    if (x.is_zero()) return 0;
                    const mpq_class& v = x.rational();
                    return v.get_den() == 1 ? valuation(v.get_num(), prime) : 0;
                };
                row.before.push_back(val(out.before.coords[i]));
                row.after.push_back(val(out.after.coords[i]));
            }
            out.valuations.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace supell
