#include "supell/theta.hpp"

#include <algorithm>
#include <bit>

#include "supell/error.hpp"

namespace supell {

namespace {

void check_genus(int g)
{
    if (g < 1 || g > kMaxThetaGenus)
        fail(Errc::unsupported, "theta characteristics need 1 <= g <= " + std::to_string(kMaxThetaGenus));
}

void check_same(const HalfIntChar& a, const HalfIntChar& b)
{
    if (a.g != b.g) fail(Errc::domain, "characteristics of different genus");
}

int popcount_parity(std::uint32_t v) { return std::popcount(v) & 1; }

}  // namespace

std::string HalfIntChar::str() const
{
    auto row = [this](std::uint32_t bits) {
        std::string s;
        for (int i = 0; i < g; ++i) {
            if (i) s += ' ';
            s += (bits >> i & 1) ? "1/2" : "0";
        }
        return s;
    };
    return "[" + row(top) + "; " + row(bottom) + "]";
}

HalfIntChar operator+(const HalfIntChar& a, const HalfIntChar& b)
{
    check_same(a, b);
    return {a.g, a.top ^ b.top, a.bottom ^ b.bottom};
}

int parity(const HalfIntChar& m) { return popcount_parity(m.top & m.bottom) ? -1 : 1; }

int pairing(const HalfIntChar& m, const HalfIntChar& a)
{
    check_same(m, a);
    // the minus sign is invisible mod 2
    return popcount_parity(m.bottom & a.top) ^ popcount_parity(m.top & a.bottom);
}

bool syzygetic(const HalfIntChar& m, const HalfIntChar& a) { return pairing(m, a) == 0; }

bool triple_syzygetic(const HalfIntChar& m, const HalfIntChar& a, const HalfIntChar& b)
{
    return (pairing(a, b) ^ pairing(b, m) ^ pairing(m, a)) == 0;
}

mpz_class gopel_count(int g, int r)
{
    if (g < 1) fail(Errc::domain, "genus must be positive");
    if (r < 0 || r > g) fail(Errc::domain, "need 0 <= r <= g");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= (mpz_class(1) << (2 * g - 2 * i)) - 1;
        den *= (mpz_class(1) << (i + 1)) - 1;
    }
    return num / den;
}

HalfIntChar branch_characteristic(int g, const std::vector<int>& T)
{
    check_genus(g);
    HalfIntChar e = HalfIntChar::zero(g);
    std::vector<int> seen;
    for (int k : T) {
        if (k < 1 || k > 2 * g + 1)
            fail(Errc::domain, "branch index " + std::to_string(k) + " outside 1.." + std::to_string(2 * g + 1));
        if (std::find(seen.begin(), seen.end(), k) != seen.end())
            fail(Errc::domain, "repeated branch index " + std::to_string(k));
        seen.push_back(k);
        int i = (k + 1) / 2;  // column, 1-based; i = g + 1 only for k = 2g + 1
        std::uint32_t top = i <= g ? 1u << (i - 1) : 0;
        int ones = k % 2 ? i - 1 : i;
        std::uint32_t bottom = (1u << ones) - 1;
        e.top ^= top;
        e.bottom ^= bottom;
    }
    return e;
}

bool thetanull_vanishes(int g, const std::vector<int>& T)
{
    check_genus(g);
    if (T.size() % 2) fail(Errc::domain, "T must have even cardinality");
    branch_characteristic(g, T);  // validates indices
    int sym = g + 1;              // #U
    for (int k : T) sym += (k % 2) ? -1 : 1;
    return sym != g + 1;
}

namespace {

std::vector<int> members(std::uint32_t mask)
{
    std::vector<int> T;
    for (int k = 0; mask >> k; ++k)
        if (mask >> k & 1) T.push_back(k + 1);
    return T;
}

}  // namespace

std::vector<std::vector<int>> vanishing_even_thetanulls(int g)
{
    check_genus(g);
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << (2 * g + 1)); ++mask) {
        if (std::popcount(mask) % 2) continue;
        auto T = members(mask);
        if (parity(branch_characteristic(g, T)) == 1 && thetanull_vanishes(g, T)) out.push_back(std::move(T));
    }
    return out;
}

ThetaCensus theta_census(int g)
{
    check_genus(g);
    ThetaCensus c;
    c.g = g;
    for (std::uint32_t t = 0; t < (1u << g); ++t)
        for (std::uint32_t b = 0; b < (1u << g); ++b) (parity({g, t, b}) == 1 ? c.even : c.odd) += 1;
    c.vanishing = static_cast<long>(vanishing_even_thetanulls(g).size());
    c.nonvanishing = c.even - c.vanishing;
    return c;
}

}  // namespace supell
