#include <benchmark/benchmark.h>

#include "supell/atlas.hpp"
#include "supell/invariants.hpp"
#include "supell/jacobian.hpp"
#include "supell/minimal.hpp"
#include "supell/theta.hpp"
#include "supell/weighted.hpp"

using namespace supell;

namespace {

const Field Q = Field::rationals();

void BM_IgusaSextic(benchmark::State& st)
{
    BinaryForm f(Q, {3, -1, 4, 1, -5, 9, 2});
    for (auto _ : st) benchmark::DoNotOptimize(igusa_sextic(f));
}
BENCHMARK(BM_IgusaSextic);

void BM_OctavicInvariants(benchmark::State& st)
{
    BinaryForm f(Q, {2, 7, -1, 8, 2, -8, 1, 8, 3});
    for (auto _ : st) benchmark::DoNotOptimize(octavic_invariants(f));
}
BENCHMARK(BM_OctavicInvariants);

void BM_Transvectant(benchmark::State& st)
{
    int d = static_cast<int>(st.range(0));
    std::vector<Scalar> a;
    for (int i = 0; i <= d; ++i) a.emplace_back(Q, static_cast<long>((i * 7919) % 23 - 11));
    BinaryForm f(Q, a);
    for (auto _ : st) benchmark::DoNotOptimize(transvectant(f, f, 2));
}
BENCHMARK(BM_Transvectant)->Arg(6)->Arg(8)->Arg(16);

// p = 3 mod 4, so square roots are a single power.
constexpr std::uint64_t kP = 1000003;

HyperCurve big_curve() { return HyperCurve(Poly(Field::prime(kP), {7, 0, 3, 1, 0, 1})); }

std::pair<MumfordDivisor, MumfordDivisor> two_classes(const HyperCurve& C)
{
    Field F = C.field();
    std::vector<MumfordDivisor> pts;
    for (long x = 1; pts.size() < 4; ++x) {
        Scalar xs(F, x), fx = C.f()(xs);
        Scalar y = fx.pow(mpz_class((kP + 1) / 4));
        if (y * y == fx) pts.push_back(mumford_validate(Poly(F, std::vector<Scalar>{-xs, Scalar(F, 1L)}), Poly::constant(y), C));
    }
    return {cantor_add(C, pts[0], pts[1]), cantor_add(C, pts[2], pts[3])};
}

void BM_CantorAdd(benchmark::State& st)
{
    HyperCurve C = big_curve();
    auto [A, B] = two_classes(C);
    for (auto _ : st) benchmark::DoNotOptimize(cantor_add(C, A, B));
}
BENCHMARK(BM_CantorAdd);

void BM_InterpolationAdd(benchmark::State& st)
{
    HyperCurve C = big_curve();
    auto [A, B] = two_classes(C);
    for (auto _ : st) benchmark::DoNotOptimize(interpolation_add_g2(C, A, B));
}
BENCHMARK(BM_InterpolationAdd);

void BM_JacobianOrder(benchmark::State& st)
{
    HyperCurve C(Poly(Field::prime(static_cast<std::uint64_t>(st.range(0))), {7, 0, 3, 1, 0, 1}));
    for (auto _ : st) benchmark::DoNotOptimize(jacobian_order_g2(C));
}
BENCHMARK(BM_JacobianOrder)->Arg(101)->Arg(1009);

void BM_LaskaReduce(benchmark::State& st)
{
    EllipticModel E{0, 0, 0, -432 * 1296, 8208 * 46656};
    for (auto _ : st) benchmark::DoNotOptimize(laska_reduce(E));
}
BENCHMARK(BM_LaskaReduce);

void BM_SupellMinimal(benchmark::State& st)
{
    SuperellipticCurve C(2, Poly(Q, {64, 0, 0, 0, 0, 6 * 64 * 8, 64 * 729}));
    for (auto _ : st) benchmark::DoNotOptimize(superelliptic_minimal(C));
}
BENCHMARK(BM_SupellMinimal);

void BM_BoundedHeight(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_bounded_height({2, 3}, mpq_class(st.range(0))));
}
BENCHMARK(BM_BoundedHeight)->Arg(2)->Arg(4);

void BM_FamilyEquationA5(benchmark::State& st)
{
    std::vector<Scalar> params{Scalar(Q, 2L)};
    for (auto _ : st) benchmark::DoNotOptimize(family_equation(24, 2, 0, params));
}
BENCHMARK(BM_FamilyEquationA5);

void BM_ThetaCensus(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(theta_census(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ThetaCensus)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
