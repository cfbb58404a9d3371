#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "supell/theta.hpp"
#include "supell/weighted.hpp"

namespace testing_support {

// 2g of y^n = h(x) with deg h = d, h separable.
inline long twice_genus(long n, long d) { return 2 + n * d - n - d - std::gcd(n, d); }

// g(y^n = f(x^m)) == g(y^n = f(x)) + g(y^n = x f(x)), deg f = delta.
inline bool genus_sum_holds(long n, long m, long delta)
{
    return twice_genus(n, delta * m) == twice_genus(n, delta) + twice_genus(n, delta + 1);
}

// Isotropic subgroups of order 2^r, each recorded once as a bitmask over the 2^(2g) characteristics.
inline long brute_gopel(int g, int r)
{
    using supell::HalfIntChar;
    std::vector<HalfIntChar> chars;
    for (std::uint32_t t = 0; t < (1u << g); ++t)
        for (std::uint32_t b = 0; b < (1u << g); ++b) chars.push_back({g, t, b});
    auto index = [](const HalfIntChar& c) { return c.top << c.g | c.bottom; };
    std::set<std::vector<bool>> groups;
    std::vector<HalfIntChar> basis;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(basis.size()) == r) {
            std::vector<bool> members(chars.size());
            for (std::uint32_t s = 0; s < (1u << r); ++s) {
                HalfIntChar e = HalfIntChar::zero(g);
                for (int i = 0; i < r; ++i)
                    if (s >> i & 1) e = e + basis[i];
                members[index(e)] = true;
            }
            if (std::count(members.begin(), members.end(), true) == (1L << r)) groups.insert(members);
            return;
        }
        for (std::size_t k = from; k < chars.size(); ++k) {
            const auto& c = chars[k];
            if (c.top == 0 && c.bottom == 0) continue;
            bool ok = true;
            for (const auto& b : basis) ok = ok && syzygetic(b, c);
            if (!ok) continue;
            basis.push_back(c);
            self(self, k + 1);
            basis.pop_back();
        }
    };
    extend(extend, 0);
    return static_cast<long>(groups.size());
}

// Every nonzero point of the box |x_i| <= c0^(q_i), deduplicated pairwise through wpoint_equal.
inline std::size_t brute_force_classes(const std::vector<int>& w, long c0)
{
    using namespace supell;
    std::vector<long> box;
    for (int q : w) {
        long b = 1;
        for (int i = 0; i < q; ++i) b *= c0;
        box.push_back(b);
    }
    std::vector<WeightedPoint> reps;
    std::vector<long> cur(w.size());
    auto visit = [&](auto&& self, std::size_t k) -> void {
        if (k == w.size()) {
            if (std::all_of(cur.begin(), cur.end(), [](long v) { return v == 0; })) return;
            std::vector<Scalar> s;
            for (long v : cur) s.emplace_back(Field(), v);
            WeightedPoint p(std::move(s), w);
            for (auto& r : reps)
                if (wpoint_equal(r, p)) return;
            reps.push_back(p);
            return;
        }
        for (long v = -box[k]; v <= box[k]; ++v) {
            cur[k] = v;
            self(self, k + 1);
        }
    };
    visit(visit, 0);
    return reps.size();
}

}  // namespace testing_support
