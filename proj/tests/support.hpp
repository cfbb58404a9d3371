#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "supell/binary_form.hpp"
#include "supell/poly.hpp"

namespace testing_support {

// Set from --seed on the test command line (default 20240611).
std::uint64_t seed();
std::mt19937_64& rng();

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline supell::Scalar rand_scalar(supell::Field F, long lo, long hi) { return supell::Scalar(F, uniform(lo, hi)); }

inline supell::BinaryForm rand_form(supell::Field F, int d, long lo = -5, long hi = 5)
{
    std::vector<supell::Scalar> a;
    for (int i = 0; i <= d; ++i) a.push_back(rand_scalar(F, lo, hi));
    if (a[0].is_zero()) a[0] = supell::Scalar(F, 1L);
    return supell::BinaryForm(F, std::move(a));
}

inline supell::Mat2 rand_mat(supell::Field F, long lo = -3, long hi = 3)
{
    for (;;) {
        supell::Mat2 M{rand_scalar(F, lo, hi), rand_scalar(F, lo, hi), rand_scalar(F, lo, hi), rand_scalar(F, lo, hi)};
        if (!M.det().is_zero()) return M;
    }
}

// prod (X - r_i Y) times lead
inline supell::BinaryForm form_from_roots(supell::Field F, const std::vector<long>& roots, long lead = 1)
{
    supell::BinaryForm f = supell::BinaryForm::constant(supell::Scalar(F, lead));
    for (long r : roots) f = f * supell::BinaryForm(F, {1L, -r});
    return f;
}

}  // namespace testing_support
