#include <benchmark/benchmark.h>

#include "cnspectra/canonical.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/rng.hpp"

namespace {

cns::Graph random_planarish(int p, uint64_t seed) {
    // Sparse random graph near the planar edge budget.
    cns::SplitMix64 rng(seed);
    cns::Graph g(p);
    int target = 3 * p - 6;
    while (g.size() < target) {
        int u = static_cast<int>(rng.below(static_cast<uint64_t>(p)));
        int v = static_cast<int>(rng.below(static_cast<uint64_t>(p)));
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

void BM_CertificateRandom(benchmark::State& state) {
    std::vector<cns::Graph> graphs;
    for (uint64_t s = 0; s < 64; ++s)
        graphs.push_back(random_planarish(static_cast<int>(state.range(0)), s));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cns::certificate(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_CertificateRandom)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_CertificateSymmetric(benchmark::State& state) {
    // Vertex-transitive inputs exercise the automorphism pruning.
    cns::Graph g = cns::icosahedron_graph();
    for (auto _ : state) benchmark::DoNotOptimize(cns::certificate(g));
}
BENCHMARK(BM_CertificateSymmetric);

}  // namespace
