#include "supell/binary_form.hpp"

#include <algorithm>

#include "supell/error.hpp"

namespace supell {

Mat2 Mat2::identity(Field F) { return {Scalar(F, 1L), Scalar(F, 0L), Scalar(F, 0L), Scalar(F, 1L)}; }

Mat2 operator*(const Mat2& m, const Mat2& n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

BinaryForm::BinaryForm(Field F, std::vector<Scalar> coeffs) : F_(F), a_(std::move(coeffs))
{
    if (a_.empty()) fail(Errc::domain, "binary form needs at least one coefficient");
    for (auto& s : a_)
        if (!(s.field() == F_)) fail(Errc::domain, "coefficient field mismatch");
}

BinaryForm::BinaryForm(Field F, std::initializer_list<long> coeffs) : F_(F)
{
    for (long v : coeffs) a_.emplace_back(F, v);
    if (a_.empty()) fail(Errc::domain, "binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_poly(const Poly& f, int d)
{
    if (f.degree() > d) fail(Errc::domain, "homogenization degree below polynomial degree");
    std::vector<Scalar> a;
    for (int i = 0; i <= d; ++i) a.push_back(f.coeff(d - i));
    return BinaryForm(f.field(), std::move(a));
}

bool BinaryForm::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

const Scalar& BinaryForm::value() const
{
    if (degree() != 0) fail(Errc::domain, "form is not a constant");
    return a_[0];
}

Poly BinaryForm::dehomogenize() const
{
    std::vector<Scalar> c(a_.rbegin(), a_.rend());
    return Poly(F_, std::move(c));
}

namespace {

Scalar falling(Field F, int n, int k)
{
    Scalar r(F, 1L);
    for (int i = 0; i < k; ++i) r *= Scalar(F, static_cast<long>(n - i));
    return r;
}

Scalar factorial(Field F, int n) { return falling(F, n, n); }

}  // namespace

BinaryForm BinaryForm::partial(int s, int t) const
{
    int d = degree();
    if (s + t > d) return BinaryForm(F_, {0L});
    std::vector<Scalar> out(d - s - t + 1, Scalar(F_, 0L));
    for (int i = t; i <= d - s; ++i) {
        if (a_[i].is_zero()) continue;
        out[i - t] = a_[i] * falling(F_, d - i, s) * falling(F_, i, t);
    }
    return BinaryForm(F_, std::move(out));
}

std::string BinaryForm::str() const
{
    std::string out;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (a_[i].is_zero()) continue;
        std::string c = a_[i].str();
        bool neg = c[0] == '-';
        if (neg) c.erase(0, 1);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        std::string mono;
        if (d - i > 0) mono += "X" + (d - i > 1 ? "^" + std::to_string(d - i) : "");
        if (i > 0) mono += (mono.empty() ? "" : "*") + std::string("Y") + (i > 1 ? "^" + std::to_string(i) : "");
        if (mono.empty()) out += c;
        else if (c == "1") out += mono;
        else out += c + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g)
{
    if (f.degree() != g.degree()) fail(Errc::domain, "adding forms of different degrees");
    std::vector<Scalar> a(f.a_);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += g.a_[i];
    return BinaryForm(f.F_, std::move(a));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + Scalar(g.F_, -1L) * g; }

BinaryForm operator*(const Scalar& s, const BinaryForm& f)
{
    std::vector<Scalar> a(f.a_);
    for (auto& c : a) c *= s;
    return BinaryForm(f.F_, std::move(a));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g)
{
    if (!(f.F_ == g.F_)) fail(Errc::domain, "form field mismatch");
    std::vector<Scalar> a(f.a_.size() + g.a_.size() - 1, Scalar(f.F_, 0L));
    for (std::size_t i = 0; i < f.a_.size(); ++i) {
        if (f.a_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.a_.size(); ++j) a[i + j] += f.a_[i] * g.a_[j];
    }
    return BinaryForm(f.F_, std::move(a));
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r)
{
    Field F = f.field();
    if (!(F == g.field())) fail(Errc::domain, "form field mismatch");
    int m = f.degree(), n = g.degree();
    if (r < 0 || r > std::min(m, n)) fail(Errc::domain, "transvectant order exceeds a degree");
    if (!F.is_rational() && F.characteristic() <= static_cast<std::uint64_t>(std::max(m, n)))
        fail(Errc::characteristic, "factorials in the transvectant are not invertible");
    Scalar pre = factorial(F, m - r) * factorial(F, n - r) / (factorial(F, m) * factorial(F, n));
    BinaryForm acc(F, std::vector<Scalar>(m + n - 2 * r + 1, Scalar(F, 0L)));
    Scalar binom(F, 1L);
    for (int k = 0; k <= r; ++k) {
        BinaryForm term = f.partial(r - k, k) * g.partial(k, r - k);
        acc = acc + ((k % 2 ? -binom : binom) * term);
        binom = binom * Scalar(F, static_cast<long>(r - k)) / Scalar(F, static_cast<long>(k + 1));
    }
    return pre * acc;
}

BinaryForm substitute(const BinaryForm& f, const Mat2& M)
{
    Field F = f.field();
    if (M.det().is_zero()) fail(Errc::domain, "singular substitution matrix");
    int d = f.degree();
    BinaryForm x(F, {M.a, M.b}), y(F, {M.c, M.d});
    std::vector<BinaryForm> xp{BinaryForm::constant(Scalar(F, 1L))}, yp{BinaryForm::constant(Scalar(F, 1L))};
    for (int i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    BinaryForm acc(F, std::vector<Scalar>(d + 1, Scalar(F, 0L)));
    for (int i = 0; i <= d; ++i)
        if (!f[i].is_zero()) acc = acc + f[i] * (xp[d - i] * yp[i]);
    return acc;
}

Scalar discriminant(const Poly& p)
{
    int d = p.degree();
    if (d < 2) fail(Errc::domain, "discriminant needs degree at least 2");
    Scalar res = resultant(p, p.derivative()) / p.lead();
    return (d * (d - 1) / 2) % 2 ? -res : res;
}

Scalar discriminant(const BinaryForm& f)
{
    Field F = f.field();
    int d = f.degree();
    if (d < 2) fail(Errc::domain, "discriminant needs degree at least 2");
    if (f.is_zero()) return Scalar(F, 0L);
    if (!f[0].is_zero()) return discriminant(f.dehomogenize());
    // Move the root at infinity away with a unimodular shear when the field allows it.
    if (F.is_rational() || F.characteristic() > static_cast<std::uint64_t>(d)) {
        for (long t = 1;; ++t) {
            Mat2 shear{Scalar(F, 1L), Scalar(F, 0L), Scalar(F, t), Scalar(F, 1L)};
            BinaryForm g = substitute(f, shear);
            if (!g[0].is_zero()) return discriminant(g.dehomogenize());
        }
    }
    // f = Y * h, disc(f) = h(1,0)^2 disc(h)
    if (d == 2) return f[1] * f[1];
    std::vector<Scalar> h(f.coeffs().begin() + 1, f.coeffs().end());
    BinaryForm hf(F, std::move(h));
    return hf[0] * hf[0] * discriminant(hf);
}

}  // namespace supell
