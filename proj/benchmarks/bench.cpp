#include <benchmark/benchmark.h>

#include "tamecount/decompose.hpp"
#include "tamecount/oracle.hpp"
#include "tamecount/qcount.hpp"
#include "tamecount/refine.hpp"

using namespace tamecount;

static void BM_CountDecomposables(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_decomposables(n));
}
BENCHMARK(BM_CountDecomposables)->Arg(12)->Arg(24)->Arg(36)->Arg(48);

static void BM_Normalize(benchmark::State& state) {
    std::vector<OrderedFactorization> members = {
        OrderedFactorization(5040, {12, 420}), OrderedFactorization(5040, {14, 360}),
        OrderedFactorization(5040, {10, 504})};
    for (auto _ : state) benchmark::DoNotOptimize(normalize(members));
}
BENCHMARK(BM_Normalize);

static void BM_CompositionSet(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            composition_set(12, OrderedFactorization(12, {4, 3}), 5));
}
BENCHMARK(BM_CompositionSet);

static void BM_TameDecompose(benchmark::State& state) {
    PrimeField F(7);
    FqPoly g(F, {0, 3, 0, 5, 1, 0, 1});
    FqPoly h(F, {0, 2, 4, 0, 0, 1});
    FqPoly f = compose(g, h);
    for (auto _ : state) benchmark::DoNotOptimize(tame_decompose(f, 6));
}
BENCHMARK(BM_TameDecompose);

BENCHMARK_MAIN();
