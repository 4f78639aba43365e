#include <benchmark/benchmark.h>

#include "cnspectra/brute.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/generators.hpp"
#include "cnspectra/planarity.hpp"
#include "cnspectra/spectrum.hpp"

namespace {

void BM_ProfileIcosahedron(benchmark::State& state) {
    cns::Graph g = cns::icosahedron_graph();
    for (auto _ : state) benchmark::DoNotOptimize(cns::profile(g));
}
BENCHMARK(BM_ProfileIcosahedron);

void BM_BruteProfileIcosahedron(benchmark::State& state) {
    cns::Graph g = cns::icosahedron_graph();
    for (auto _ : state) benchmark::DoNotOptimize(cns::brute_profile(g));
}
BENCHMARK(BM_BruteProfileIcosahedron);

void BM_ASet2Bipyramid(benchmark::State& state) {
    cns::Graph g = cns::b_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cns::a_set(g, 2));
}
BENCHMARK(BM_ASet2Bipyramid)->Arg(16)->Arg(48);

void BM_PlanarityGenerated(benchmark::State& state) {
    // Largest graphs the generators emit (the degree-5 cap construction).
    cns::Graph g = cns::gen_a1(cns::A1Target{{5}}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(cns::is_planar(g));
}
BENCHMARK(BM_PlanarityGenerated);

}  // namespace

BENCHMARK_MAIN();
