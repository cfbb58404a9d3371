#include "supell/poly.hpp"

#include <algorithm>
#include <random>

#include "supell/error.hpp"

namespace supell {

Poly::Poly(Field F, std::vector<Scalar> coeffs) : F_(F), c_(std::move(coeffs))
{
    for (auto& s : c_)
        if (!(s.field() == F_)) fail(Errc::domain, "coefficient field mismatch");
    trim();
}

Poly::Poly(Field F, std::initializer_list<long> coeffs) : F_(F)
{
    for (long v : coeffs) c_.emplace_back(F, v);
    trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int degree)
{
    std::vector<Scalar> v(degree + 1, Scalar(c.field(), 0L));
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const
{
    if (i < 0 || i > degree()) return Scalar(F_, 0L);
    return c_[i];
}

Scalar Poly::lead() const { return is_zero() ? Scalar(F_, 0L) : c_.back(); }

Scalar Poly::operator()(const Scalar& x) const
{
    Scalar acc(F_, 0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const
{
    std::vector<Scalar> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Scalar(F_, static_cast<long>(i)));
    return Poly(F_, std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Poly Poly::scaled(const Scalar& s) const
{
    std::vector<Scalar> v(c_);
    for (auto& c : v) c *= s;
    return Poly(F_, std::move(v));
}

Poly Poly::dilate(const Scalar& k) const
{
    std::vector<Scalar> v(c_);
    Scalar pk(F_, 1L);
    for (auto& c : v) {
        c *= pk;
        pk *= k;
    }
    return Poly(F_, std::move(v));
}

Poly Poly::inflate(int k) const
{
    if (is_zero()) return *this;
    std::vector<Scalar> v(degree() * k + 1, Scalar(F_, 0L));
    for (int i = 0; i <= degree(); ++i) v[i * k] = c_[i];
    return Poly(F_, std::move(v));
}

std::string Poly::str() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string c = c_[i].str();
        if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
        else if (c[0] == '-') out += "-";
        if (c[0] == '-') c.erase(0, 1);
        bool unit = c == "1";
        if (i == 0 || !unit) out += c;
        if (i > 0) out += (i == 0 || unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b)
{
    if (!(a.F_ == b.F_)) fail(Errc::domain, "polynomial field mismatch");
    const Poly& lo = a.degree() < b.degree() ? a : b;
    const Poly& hi = a.degree() < b.degree() ? b : a;
    std::vector<Scalar> v(hi.c_);
    for (std::size_t i = 0; i < lo.c_.size(); ++i) v[i] += lo.c_[i];
    return Poly(a.F_, std::move(v));
}

Poly operator-(const Poly& a) { return a.scaled(Scalar(a.F_, -1L)); }

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    if (!(a.F_ == b.F_)) fail(Errc::domain, "polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return Poly(a.F_);
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(a.F_, 0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.F_, std::move(v));
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    if (b.is_zero()) fail(Errc::domain, "polynomial division by zero");
    Field F = a.field();
    std::vector<Scalar> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        q = Poly(F);
        r = a;
        return;
    }
    std::vector<Scalar> quo(dq + 1, Scalar(F, 0L));
    Scalar inv = b.lead().inverse();
    for (int k = dq; k >= 0; --k) {
        Scalar c = rem[k + db] * inv;
        quo[k] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    rem.resize(db);
    q = Poly(F, std::move(quo));
    r = Poly(F, std::move(rem));
}

Poly operator/(const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly exact_div(const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) fail(Errc::domain, "inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a0, const Poly& b0)
{
    Poly a = a0, b = b0;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const Poly& f)
{
    if (f.degree() < 1) return true;
    if (f.field().is_rational()) {
        // a squarefree reduction of the same degree certifies it over Q
        for (std::uint64_t p : {1000000007ULL, 998244353ULL, 2305843009213693951ULL}) {
            Field Fp = Field::prime(p);
            std::vector<Scalar> c;
            bool good = true;
            for (const auto& a : f.coeffs()) {
                if (mpz_divisible_ui_p(a.rational().get_den_mpz_t(), static_cast<unsigned long>(p))) {
                    good = false;
                    break;
                }
                c.emplace_back(Fp, a.rational());
            }
            if (!good || c.back().is_zero()) continue;
            Poly g(Fp, std::move(c));
            if (gcd(g, g.derivative()).degree() == 0) return true;
        }
    }
    return gcd(f, f.derivative()).degree() == 0;
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t)
{
    Field F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Scalar(F, 1L)), s1(F);
    Poly t0(F), t1 = Poly::constant(Scalar(F, 1L));
    while (!r1.is_zero()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = Poly(F);
        t = Poly(F);
        return r0;
    }
    Scalar inv = r0.lead().inverse();
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod)
{
    Poly r = Poly::constant(Scalar(base.field(), 1L)) % mod;
    Poly b = base % mod;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
    }
    return r;
}

Scalar determinant(std::vector<std::vector<Scalar>> m, Field F)
{
    std::size_t n = m.size();
    Scalar det(F, 1L);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Scalar(F, 0L);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar k = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
        }
    }
    return det;
}

Scalar resultant(const Poly& a, const Poly& b)
{
    Field F = a.field();
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return Scalar(F, 0L);
    if (m == 0) return a.lead().pow(static_cast<long>(n));
    if (n == 0) return b.lead().pow(static_cast<long>(m));
    std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Scalar>> S(N, std::vector<Scalar>(N, Scalar(F, 0L)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[n + i][i + j] = b.coeff(n - j);
    return determinant(std::move(S), F);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f)
{
    Field F = f.field();
    if (!F.is_rational() && static_cast<std::uint64_t>(f.degree()) >= F.characteristic())
        fail(Errc::characteristic, "squarefree decomposition needs p > deg f");
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0) return out;
    Poly a = gcd(f, f.derivative());
    Poly b = exact_div(f, a);
    Poly c = exact_div(f.derivative(), a);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

namespace {

void split_roots(const Poly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<Scalar>& out)
{
    Field F = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(-f.coeff(0) / f.coeff(1));
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    mpz_class e(static_cast<unsigned long>((p - 1) / 2));
    for (;;) {
        Poly shift(F, std::vector<Scalar>{Scalar(F, mpz_class(static_cast<unsigned long>(dist(rng)))), Scalar(F, 1L)});
        Poly h = pow_mod(shift, e, f) - Poly::constant(Scalar(F, 1L));
        Poly g = gcd(f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_roots(g, p, rng, out);
            split_roots(exact_div(f, g), p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Scalar> roots_mod_p(const Poly& f, std::uint64_t seed)
{
    Field F = f.field();
    if (F.is_rational()) fail(Errc::domain, "roots_mod_p over Q");
    if (f.is_zero()) fail(Errc::domain, "roots of the zero polynomial");
    std::uint64_t p = F.characteristic();
    Poly fm = f.monic();
    Poly xp = pow_mod(Poly::x(F), mpz_class(static_cast<unsigned long>(p)), fm);
    Poly g = gcd(fm, xp - Poly::x(F));
    std::vector<Scalar> out;
    std::mt19937_64 rng(seed);
    split_roots(g, p, rng, out);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
    return out;
}

Poly interpolate(const std::vector<std::pair<Scalar, Scalar>>& pts, Field F)
{
    Poly acc(F);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly basis = Poly::constant(Scalar(F, 1L));
        Scalar den(F, 1L);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            basis *= Poly(F, std::vector<Scalar>{-pts[j].first, Scalar(F, 1L)});
            den *= pts[i].first - pts[j].first;
        }
        if (den.is_zero()) fail(Errc::domain, "interpolation nodes must be distinct");
        acc += basis.scaled(pts[i].second / den);
    }
    return acc;
}

}  // namespace supell
