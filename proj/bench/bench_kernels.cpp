// OpenMP kernels against their serial references on desk-scale groups.

#include <benchmark/benchmark.h>

#include "epg/reconstruction.hpp"

namespace {

const epg::FiniteGroup& group_for(std::int64_t which) {
    static const epg::FiniteGroup groups[] = {
        epg::make_group(epg::GroupSpec::symmetric(5)),
        epg::make_group(epg::GroupSpec::dihedral(60)),
        epg::make_group(epg::GroupSpec::product({epg::GroupSpec::cyclic(2), epg::GroupSpec::cyclic(2), epg::GroupSpec::cyclic(60)})),
    };
    return groups[which];
}

void label(benchmark::State& state) {
    static const char* names[] = {"S5", "D120", "C2xC2xC60"};
    state.SetLabel(names[state.range(0)]);
}

void BM_EnhancedParallel(benchmark::State& state) {
    const auto& g = group_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(epg::enhanced_power_graph(g));
    label(state);
}

void BM_EnhancedSerial(benchmark::State& state) {
    const auto& g = group_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(epg::reference::enhanced_power_graph(g));
    label(state);
}

void BM_TwinCountsParallel(benchmark::State& state) {
    const auto p = epg::power_graph(group_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epg::twin_counts(p));
    label(state);
}

void BM_TwinCountsSerial(benchmark::State& state) {
    const auto p = epg::power_graph(group_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epg::reference::twin_counts(p));
    label(state);
}

void BM_ReconstructParallel(benchmark::State& state) {
    const auto p = epg::power_graph(group_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epg::reconstruct_enhanced(p));
    label(state);
}

void BM_ReconstructSerial(benchmark::State& state) {
    const auto p = epg::power_graph(group_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epg::reference::reconstruct_enhanced(p));
    label(state);
}

}  // namespace

BENCHMARK(BM_EnhancedParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnhancedSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwinCountsParallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TwinCountsSerial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReconstructParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
