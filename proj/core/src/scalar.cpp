#include "supell/scalar.hpp"

#include <charconv>

#include "supell/error.hpp"

namespace supell {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

Field Field::prime(std::uint64_t p)
{
    if (p < 3 || p >= (1ULL << 62))
        fail(Errc::domain, "field characteristic must be an odd prime below 2^62");
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        fail(Errc::domain, "GF(p) needs p prime, got " + std::to_string(p));
    Field F;
    F.p_ = p;
    return F;
}

Field Field::parse(std::string_view s)
{
    if (s == "Q") return Field();
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
        auto body = s.substr(3, s.size() - 4);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
    }
    fail(Errc::parse, "bad field descriptor '" + std::string(s) + "'");
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint64_t p)
{
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

void same_field(const Scalar& a, const Scalar& b)
{
    if (!(a.field() == b.field()))
        fail(Errc::domain, "mixed fields " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar::Scalar(Field F, long v) : F_(F)
{
    if (F_.is_rational()) {
        q_ = v;
    } else {
        auto p = static_cast<__int128>(F_.characteristic());
        __int128 r = static_cast<__int128>(v) % p;
        if (r < 0) r += p;
        r_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(Field F, const mpz_class& v) : F_(F)
{
    if (F_.is_rational())
        q_ = v;
    else
        r_ = reduce(v, F_.characteristic());
}

Scalar::Scalar(Field F, const mpq_class& v) : F_(F)
{
    if (F_.is_rational()) {
        q_ = v;
        q_.canonicalize();
        return;
    }
    std::uint64_t p = F_.characteristic();
    std::uint64_t den = reduce(v.get_den(), p);
    if (den == 0) fail(Errc::characteristic, "denominator vanishes in " + F_.name());
    r_ = mulmod(reduce(v.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field F, std::string_view s)
{
    std::string t(s);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) fail(Errc::parse, "bad scalar '" + t + "'");
    if (q.get_den() == 0) fail(Errc::parse, "zero denominator in '" + t + "'");
    q.canonicalize();
    return Scalar(F, q);
}

bool Scalar::is_zero() const { return F_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return F_.is_rational() ? q_ == 1 : r_ == 1; }

bool Scalar::is_integer() const { return F_.is_rational() ? q_.get_den() == 1 : true; }

const mpq_class& Scalar::rational() const
{
    if (!F_.is_rational()) fail(Errc::domain, "rational value requested in " + F_.name());
    return q_;
}

std::uint64_t Scalar::residue() const
{
    if (F_.is_rational()) fail(Errc::domain, "residue requested for a rational");
    return r_;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) fail(Errc::domain, "division by zero");
    Scalar s(*this);
    if (F_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = powmod(r_, F_.characteristic() - 2, F_.characteristic());
    return s;
}

Scalar Scalar::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Scalar r(F_, 1), b(*this);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::pow(const mpz_class& e) const
{
    if (e < 0) return inverse().pow(mpz_class(-e));
    if (!F_.is_rational()) {
        mpz_class m(static_cast<unsigned long>(F_.characteristic() - 1));
        mpz_class ee = e % m;
        if (ee == 0 && e != 0 && !is_zero()) return Scalar(F_, 1L);
        return pow(ee.get_si());
    }
    if (!e.fits_slong_p()) fail(Errc::domain, "exponent too large over Q");
    return pow(e.get_si());
}

std::string Scalar::str() const
{
    return F_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    same_field(a, b);
    Scalar s(a);
    if (a.F_.is_rational()) {
        s.q_ = a.q_ + b.q_;
    } else {
        std::uint64_t p = a.F_.characteristic();
        std::uint64_t t = a.r_ + b.r_;
        s.r_ = t >= p ? t - p : t;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    same_field(a, b);
    Scalar s(a);
    if (a.F_.is_rational())
        s.q_ = a.q_ - b.q_;
    else
        s.r_ = a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + a.F_.characteristic() - b.r_;
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    same_field(a, b);
    Scalar s(a);
    if (a.F_.is_rational())
        s.q_ = a.q_ * b.q_;
    else
        s.r_ = mulmod(a.r_, b.r_, a.F_.characteristic());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar operator-(const Scalar& a)
{
    Scalar s(a);
    if (a.F_.is_rational())
        s.q_ = -a.q_;
    else
        s.r_ = a.r_ == 0 ? 0 : a.F_.characteristic() - a.r_;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.F_ == b.F_)) return false;
    return a.F_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace supell
