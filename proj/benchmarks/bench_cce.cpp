#include <benchmark/benchmark.h>

#include "cce/cce.hpp"
#include "cce/enumerate.hpp"
#include "cce/shape.hpp"
#include "cce/synth.hpp"
#include "cce/verify.hpp"

namespace {

void BM_CceRotation(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const cce::Digraph d = cce::build_rotation(m, m / 3);
    for (auto _ : state) benchmark::DoNotOptimize(cce::cce_graph(d));
    state.SetComplexityN(m);
}
BENCHMARK(BM_CceRotation)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ToSpec(benchmark::State& state) {
    const auto g = cce::cce_graph(cce::build_rotation(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(cce::to_spec(g));
}
BENCHMARK(BM_ToSpec)->Arg(64)->Arg(1024);

void BM_Synthesize(benchmark::State& state) {
    const auto spec = cce::ComponentSpec::parse("C7 + C5 + 2xP4 + P3 + P1");
    for (auto _ : state) benchmark::DoNotOptimize(cce::synthesize_witness(spec));
}
BENCHMARK(BM_Synthesize);

void BM_IsCanonical(benchmark::State& state) {
    const auto g = cce::BitDigraph::from_digraph(cce::random_22(7, false, 9));
    for (auto _ : state) benchmark::DoNotOptimize(cce::is_canonical(g));
}
BENCHMARK(BM_IsCanonical);

void BM_Enumerate(benchmark::State& state) {
    const cce::EnumerationConfig cfg{.n = static_cast<int>(state.range(0)),
                                     .acyclic = state.range(1) != 0,
                                     .isomorph_reduction = true};
    for (auto _ : state)
        benchmark::DoNotOptimize(cce::for_each_bitdigraph(cfg, [](const cce::BitDigraph&) {}));
}
BENCHMARK(BM_Enumerate)->Args({5, 0})->Args({6, 1})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_IsMinimal(benchmark::State& state) {
    const cce::Digraph d = cce::random_22(12, true, 4);
    for (auto _ : state) benchmark::DoNotOptimize(cce::is_minimal(d));
}
BENCHMARK(BM_IsMinimal);

void BM_PropsRandom(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cce::verify_props_random(12, 100, 1));
}
BENCHMARK(BM_PropsRandom)->Unit(benchmark::kMillisecond);

void BM_CharacterizationSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cce::verify_path_cycle_characterization(5));
}
BENCHMARK(BM_CharacterizationSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
