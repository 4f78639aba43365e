#include <benchmark/benchmark.h>

#include "cnspectra/enumerate.hpp"

namespace {

void BM_EnumerateAll(benchmark::State& state) {
    for (auto _ : state) {
        long count = 0;
        cns::enumerate_graphs(static_cast<int>(state.range(0)), cns::GraphFilter{},
                              [&](const cns::Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateAll)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumeratePlanarConnected(benchmark::State& state) {
    cns::GraphFilter f;
    f.planar = true;
    f.connected = true;
    for (auto _ : state) {
        long count = 0;
        cns::enumerate_graphs(static_cast<int>(state.range(0)), f,
                              [&](const cns::Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePlanarConnected)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
