#include <benchmark/benchmark.h>

#include "richardson/sweep.hpp"

using namespace richardson;

static void BM_Sweep(benchmark::State& state) {
    Chart c(Permutation::longest(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(c));
}
BENCHMARK(BM_Sweep)->DenseRange(4, 7);

static void BM_RoundTrip(benchmark::State& state) {
    Chart c(Permutation::parse("31542"));
    for (auto _ : state) benchmark::DoNotOptimize(recovery_round_trip(c));
}
BENCHMARK(BM_RoundTrip);
