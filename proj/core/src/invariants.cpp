#include "supell/invariants.hpp"

#include <algorithm>

#include "supell/error.hpp"

namespace supell {

const char* profile_name(RootProfile p)
{
    switch (p) {
    case RootProfile::separable: return "separable";
    case RootProfile::triple: return "exactly-3";
    case RootProfile::quadruple_or_more: return ">=4";
    case RootProfile::quadruple: return "exactly-4";
    case RootProfile::quintuple_or_more: return ">=5";
    case RootProfile::other_repeated: return "other-repeated";
    }
    return "?";
}

namespace {

void need_degree(const BinaryForm& f, int d)
{
    if (f.degree() != d) fail(Errc::domain, "expected a form of degree " + std::to_string(d));
}

Scalar tv0(const BinaryForm& f, const BinaryForm& g, int r) { return transvectant(f, g, r).value(); }

Scalar sc(Field F, long v) { return Scalar(F, v); }

}  // namespace

std::array<Scalar, 4> clebsch_sextic(const BinaryForm& f)
{
    need_degree(f, 6);
    BinaryForm i = transvectant(f, f, 4);
    BinaryForm delta = transvectant(i, i, 2);
    BinaryForm y1 = transvectant(f, i, 4);
    BinaryForm y2 = transvectant(i, y1, 2);
    BinaryForm y3 = transvectant(i, y2, 2);
    return {tv0(f, f, 6), tv0(i, i, 4), tv0(i, delta, 4), tv0(y3, y1, 2)};
}

SexticInvariants igusa_sextic(const BinaryForm& f)
{
    Field F = f.field();
    auto [A, B, C, D] = clebsch_sextic(f);
    SexticInvariants s{};
    s.A = A;
    s.B = B;
    s.C = C;
    s.D = D;
    Scalar A2 = A * A, A3 = A2 * A;
    s.I2 = sc(F, -120) * A;
    s.I4 = sc(F, -720) * A2 + sc(F, 6750) * B;
    s.I6 = sc(F, 8640) * A3 - sc(F, 108000) * A * B + sc(F, 202500) * C;
    s.I10 = sc(F, -62208) * A3 * A2 + sc(F, 972000) * A3 * B + sc(F, 1620000) * A2 * C - sc(F, 3037500) * A * B * B -
            sc(F, 6075000) * B * C - sc(F, 4556250) * D;
    s.J2 = s.I2 / sc(F, 8);
    s.J4 = (sc(F, 4) * s.J2 * s.J2 - s.I4) / sc(F, 96);
    s.J6 = (sc(F, 8) * s.J2 * s.J2 * s.J2 - sc(F, 160) * s.J2 * s.J4 - s.I6) / sc(F, 576);
    s.J10 = s.I10 / sc(F, 4096);
    return s;
}

OctavicInvariants octavic_invariants(const BinaryForm& f)
{
    need_degree(f, 8);
    Field F = f.field();
    if (!F.is_rational() && F.characteristic() <= 7) fail(Errc::characteristic, "octavic invariants need p > 7");
    BinaryForm g = transvectant(f, f, 4);
    BinaryForm k = transvectant(f, f, 6);
    BinaryForm h = transvectant(k, k, 2);
    BinaryForm m = transvectant(f, k, 4);
    BinaryForm n = transvectant(f, h, 4);
    BinaryForm p = transvectant(g, k, 4);
    BinaryForm q = transvectant(g, h, 4);
    auto c = [&](long two, long three, long five, long seven) {
        Scalar v(F, 1L);
        v *= Scalar(F, 2L).pow(two);
        v *= Scalar(F, 3L).pow(three);
        v *= Scalar(F, 5L).pow(five);
        v *= Scalar(F, 7L).pow(seven);
        return v;
    };
    OctavicInvariants o;
    o.J[0] = c(2, 0, 1, 1) * tv0(f, f, 8);
    o.J[1] = c(4, -1, 2, 3) * tv0(f, g, 8);
    o.J[2] = c(9, 1, 0, 4) * tv0(k, k, 4);
    o.J[3] = c(9, 0, 1, 5) * tv0(m, k, 4);
    o.J[4] = c(14, 2, 0, 6) * tv0(k, h, 4);
    o.J[5] = c(14, 1, 1, 7) * tv0(m, h, 4);
    o.J[6] = c(17, 1, 2, 9) * tv0(p, h, 4);
    o.J[7] = c(19, 2, 1, 9) * tv0(n, h, 4);
    o.J[8] = c(22, 2, 2, 11) * tv0(q, h, 4);
    return o;
}

WeightedPoint sextic_point(const SexticInvariants& s) { return WeightedPoint({s.J2, s.J4, s.J6, s.J10}, {2, 4, 6, 10}); }

WeightedPoint sextic_integral_point(const SexticInvariants& s)
{
    return WeightedPoint({s.I2, s.I4, s.I6, s.I10}, {2, 4, 6, 10});
}

WeightedPoint octavic_point(const OctavicInvariants& o)
{
    return WeightedPoint({o.J[0], o.J[1], o.J[2], o.J[3], o.J[4], o.J[5]}, {2, 3, 4, 5, 6, 7});
}

std::optional<Scalar> sextic_equivalent(const BinaryForm& f, const BinaryForm& g)
{
    SexticInvariants a = igusa_sextic(f), b = igusa_sextic(g);
    if (a.J10.is_zero() || b.J10.is_zero()) fail(Errc::singular, "J10 vanishes");
    // lambda * point(g) == point(f)
    return wpoint_equal(sextic_point(b), sextic_point(a));
}

std::optional<Scalar> octavic_equivalent(const BinaryForm& f, const BinaryForm& g)
{
    need_degree(f, 8);
    need_degree(g, 8);
    if (discriminant(f).is_zero() || discriminant(g).is_zero()) fail(Errc::singular, "octavic with a repeated root");
    OctavicInvariants a = octavic_invariants(f), b = octavic_invariants(g);
    auto all_zero = [](const OctavicInvariants& o) {
        return std::all_of(o.J.begin(), o.J.begin() + 6, [](const Scalar& s) { return s.is_zero(); });
    };
    if (all_zero(a) || all_zero(b)) {
        if (all_zero(a) && all_zero(b)) return Scalar(f.field(), 1L);
        return std::nullopt;
    }
    return wpoint_equal(octavic_point(b), octavic_point(a));
}

int max_root_multiplicity(const BinaryForm& f)
{
    if (f.is_zero()) fail(Errc::domain, "zero form");
    int at_infinity = 0;
    while (at_infinity <= f.degree() && f[at_infinity].is_zero()) ++at_infinity;
    int best = at_infinity;
    for (auto& [factor, mult] : squarefree_decomposition(f.dehomogenize())) {
        (void)factor;
        best = std::max(best, mult);
    }
    return best;
}

RootProfile multiplicity_profile(const BinaryForm& f)
{
    int d = f.degree();
    if (d != 6 && d != 8) fail(Errc::domain, "multiplicity profile is defined for degrees 6 and 8");
    int mu = max_root_multiplicity(f);
    if (mu <= 1) return RootProfile::separable;
    if (d == 6) {
        if (mu == 3) return RootProfile::triple;
        if (mu >= 4) return RootProfile::quadruple_or_more;
    } else {
        if (mu == 4) return RootProfile::quadruple;
        if (mu >= 5) return RootProfile::quintuple_or_more;
    }
    return RootProfile::other_repeated;
}

DihedralInvariants dihedral_invariants(int n, const std::vector<Scalar>& a, int r)
{
    (void)n;
    if (r <= 2) fail(Errc::unsupported, "dihedral invariants need r > 2");
    if (static_cast<int>(a.size()) != r - 1) fail(Errc::domain, "expected r - 1 coefficients");
    DihedralInvariants out;
    out.r = r;
    for (int i = 1; i <= r - 1; ++i)
        out.u.push_back(a[0].pow(static_cast<long>(r - i)) * a[i - 1] +
                        a[r - 2].pow(static_cast<long>(r - i)) * a[r - i - 1]);
    return out;
}

BinaryForm curve_form(const SuperellipticCurve& C)
{
    int d = C.degree();
    if (C.n != 2) fail(Errc::unsupported, "invariants are implemented for n = 2");
    if (d == 5 || d == 6) return BinaryForm::from_poly(C.f, 6);
    if (d == 7 || d == 8) return BinaryForm::from_poly(C.f, 8);
    fail(Errc::unsupported, "invariants are implemented for deg f in {5,6,7,8}");
}

WeightedPoint moduli_point(const SuperellipticCurve& C)
{
    BinaryForm f = curve_form(C);
    if (discriminant(f).is_zero()) fail(Errc::singular, "zero discriminant");
    if (f.degree() == 6) return sextic_point(igusa_sextic(f));
    return octavic_point(octavic_invariants(f));
}

}  // namespace supell
