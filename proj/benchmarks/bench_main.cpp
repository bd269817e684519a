#include <benchmark/benchmark.h>

#include "hallq/hn_recursion.hpp"
#include "hallq/integration.hpp"
#include "hallq/sym_char.hpp"
#include "hallq/waldhausen.hpp"

using namespace hallq;

namespace {

void BM_enumerate_kronecker(benchmark::State& state) {
    for (auto _ : state) {
        QuiverRepContext ctx(Quiver::kronecker(2), 3);
        benchmark::DoNotOptimize(ctx.iso_classes({2, 1}).size());
    }
}
BENCHMARK(BM_enumerate_kronecker);

void BM_hn_recursion_a2(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SemistableSolver solver(quiver_slope_context(Quiver::a2(), StabilityData({1, 0})));
        benchmark::DoNotOptimize(solver.semistable_class({n, n}, SsMethod::recursive));
    }
}
BENCHMARK(BM_hn_recursion_a2)->Arg(2)->Arg(3)->Arg(4);

void BM_reineke_inversion_a2(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SemistableSolver solver(quiver_slope_context(Quiver::a2(), StabilityData({1, 0})));
        benchmark::DoNotOptimize(solver.semistable_class({n, n}, SsMethod::inversion));
    }
}
BENCHMARK(BM_reineke_inversion_a2)->Arg(2)->Arg(3);

void BM_gaussian_multinomial(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    std::vector<int> delta(r, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_multinomial(r, delta));
}
BENCHMARK(BM_gaussian_multinomial)->Arg(6)->Arg(10)->Arg(14);

void BM_character_table(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // bypass the cache to measure the Murnaghan-Nakayama recursion
        auto parts = partitions_of(r);
        Int acc = 0;
        for (auto& l : parts)
            for (auto& m : parts) acc += mn_character(l, m);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_character_table)->Arg(6)->Arg(8);

void BM_2segal_vect(benchmark::State& state) {
    for (auto _ : state) {
        QuiverRepContext ctx(Quiver::a1(), 2);
        QuiverCountingContext cc(ctx);
        benchmark::DoNotOptimize(verify_2segal_counting(cc, 3).all_pass);
    }
}
BENCHMARK(BM_2segal_vect);

void BM_integration_morphism(benchmark::State& state) {
    for (auto _ : state) {
        QuiverRepContext ctx(Quiver::a2(), 2);
        benchmark::DoNotOptimize(verify_integration_morphism(ctx, 3).all_pass);
    }
}
BENCHMARK(BM_integration_morphism);

}  // namespace

BENCHMARK_MAIN();
