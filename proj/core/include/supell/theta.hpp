#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace supell {

// Half-integer characteristic; bit i of top/bottom set means entry i is 1/2.
struct HalfIntChar {
    int g = 0;
    std::uint32_t top = 0, bottom = 0;

    static HalfIntChar zero(int g) { return {g, 0, 0}; }
    std::string str() const;

    friend HalfIntChar operator+(const HalfIntChar& a, const HalfIntChar& b);
    friend bool operator==(const HalfIntChar&, const HalfIntChar&) = default;
};

constexpr int kMaxThetaGenus = 12;

// +1 even, -1 odd
int parity(const HalfIntChar& m);

// |m, a| mod 2
int pairing(const HalfIntChar& m, const HalfIntChar& a);
bool syzygetic(const HalfIntChar& m, const HalfIntChar& a);
bool triple_syzygetic(const HalfIntChar& m, const HalfIntChar& a, const HalfIntChar& b);

// Number of Goepel groups with 2^r elements.
mpz_class gopel_count(int g, int r);

// Sum of eps(k) over k in T, T a subset of {1, ..., 2g+1}.
HalfIntChar branch_characteristic(int g, const std::vector<int>& T);

// theta[eps_T] = 0 for an even characteristic.
bool thetanull_vanishes(int g, const std::vector<int>& T);

// Even-cardinality T (one per characteristic) with even eps_T and vanishing theta constant.
std::vector<std::vector<int>> vanishing_even_thetanulls(int g);

struct ThetaCensus {
    int g = 0;
    long even = 0, odd = 0;
    long vanishing = 0, nonvanishing = 0;
};

ThetaCensus theta_census(int g);

}  // namespace supell
