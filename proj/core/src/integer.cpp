#include "supell/integer.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "supell/error.hpp"

namespace supell {

namespace {

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; n composite, odd.
mpz_class rho(const mpz_class& n, unsigned long c)
{
    auto step = [&](const mpz_class& x) { return mpz_class((x * x + c) % n); };
    mpz_class y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 64;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = gcd(mpz_class(abs(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = n;
    for (unsigned long c = 1; d == n; ++c) d = rho(n, c);
    split(d, out);
    split(mpz_class(n / d), out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n0)
{
    if (n0 == 0) fail(Errc::domain, "factor(0)");
    mpz_class n = abs(n0);
    std::map<mpz_class, unsigned> out;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    for (unsigned long p = 17; p < 10000 && n > 1; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    split(n, out);
    return {out.begin(), out.end()};
}

unsigned valuation(const mpz_class& n, const mpz_class& p)
{
    if (n == 0) fail(Errc::domain, "valuation of 0");
    mpz_class m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

std::vector<mpz_class> divisors(const mpz_class& n)
{
    std::vector<mpz_class> ds{1};
    for (auto& [p, e] : factor(n)) {
        std::size_t base = ds.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool exact_root(const mpz_class& n, unsigned k, mpz_class& r)
{
    if (k == 0) fail(Errc::domain, "zeroth root");
    if (n < 0) {
        if (k % 2 == 0) return false;
        mpz_class m = -n;
        if (!exact_root(m, k, r)) return false;
        r = -r;
        return true;
    }
    return mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

mpz_class pow(const mpz_class& b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace supell
