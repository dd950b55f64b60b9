#include "floorgs/invariant.hpp"

#include <benchmark/benchmark.h>

using namespace floorgs;

namespace {

// (n, a, b, g) of trapezoid(n, a, b); the argument picks one.
constexpr int cases[][4] = {
    {1, 3, 0, 0}, {0, 3, 2, 0}, {2, 2, 1, 0}, {1, 4, 0, 0}, {1, 5, 0, 4},
};

HProfile profile_of(int k)
{
    return profile(trapezoid(cases[k][0], cases[k][1], cases[k][2]));
}

void BM_Enumerate(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const HProfile h = profile_of(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_diagrams(h, cases[k][3]));
}

void BM_Markings(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto ds = enumerate_diagrams(profile_of(k), cases[k][3]);
    for (auto _ : state)
        for (const auto& d : ds)
            benchmark::DoNotOptimize(enumerate_markings(d));
}

void BM_Invariant(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const HProfile h = profile_of(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant(h, cases[k][3], 1));
}

void BM_EvaluateAllS(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const MarkedDiagrams md = collect_marked_diagrams(profile_of(k), cases[k][3]);
    for (auto _ : state)
        for (int s = 0; s <= md.s_max(); ++s)
            benchmark::DoNotOptimize(md.evaluate(s));
}

} // namespace

BENCHMARK(BM_Enumerate)->DenseRange(0, 4);
BENCHMARK(BM_Markings)->DenseRange(0, 4);
BENCHMARK(BM_Invariant)->DenseRange(0, 4);
BENCHMARK(BM_EvaluateAllS)->DenseRange(0, 4);

BENCHMARK_MAIN();
