#include <benchmark/benchmark.h>

#include "richardson/charts.hpp"
#include "richardson/hilbert.hpp"
#include "richardson/invariants.hpp"

using namespace richardson;

static void BM_BuchbergerSchubertChart(benchmark::State& state) {
    IdealGens I = schubert_ideal_in_chart(Permutation::parse("35142"), Permutation::parse("12345"));
    MonomialOrder order = MonomialOrder::degrevlex(I.num_vars());
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, order));
}
BENCHMARK(BM_BuchbergerSchubertChart)->Unit(benchmark::kMillisecond);

static void BM_HilbertNumerator(benchmark::State& state) {
    IdealGens I = schubert_ideal_in_chart(Permutation::parse("4231"), Permutation::parse("1234"));
    for (auto _ : state) {
        clear_groebner_cache();
        benchmark::DoNotOptimize(hilbert_numerator(I));
    }
}
BENCHMARK(BM_HilbertNumerator);

static void BM_LocalInvariantsS5(benchmark::State& state) {
    Permutation w = Permutation::parse("45312"), s = Permutation::parse("12345");
    for (auto _ : state) {
        clear_invariant_cache();
        clear_groebner_cache();
        benchmark::DoNotOptimize(schubert_invariants(w, s));
    }
}
BENCHMARK(BM_LocalInvariantsS5)->Unit(benchmark::kMillisecond);
