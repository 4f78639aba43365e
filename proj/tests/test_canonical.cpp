#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cnspectra/brute.hpp"
#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/graph6.hpp"
#include "test_util.hpp"

using namespace cns;

TEST_CASE("relabellings share a certificate") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = cnstest::random_graph(rng.range(1, 10), rng, rng.range(10, 90));
        auto perm = cnstest::random_permutation(g.order(), rng);
        CHECK(certificate(g) == certificate(relabelled(g, perm)));
    }
    // Highly symmetric inputs hit the automorphism pruning path.
    for (const Graph& g : {complete_graph(8), Graph(8), cycle_graph(8), icosahedron_graph(),
                           cube_graph(), complete_bipartite(4, 4)}) {
        auto perm = cnstest::random_permutation(g.order(), rng);
        CHECK(certificate(g) == certificate(relabelled(g, perm)));
    }
}

TEST_CASE("distinct graphs get distinct certificates") {
    CHECK(certificate(cycle_graph(5)) != certificate(path_graph(5)));
    // Equal degree sequences, not isomorphic.
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_FALSE(brute_isomorphic(two_triangles, cycle_graph(6)));
    CHECK(certificate(two_triangles) != certificate(cycle_graph(6)));
}

TEST_CASE("certificate equality matches brute-force isomorphism") {
    SplitMix64 rng(909);
    // Random pairs, plus pairs built to be isomorphic.
    for (int trial = 0; trial < 120; ++trial) {
        int p = rng.range(1, 7);
        Graph a = cnstest::random_graph(p, rng, rng.range(10, 90));
        Graph b;
        if (rng.coin()) {
            auto perm = cnstest::random_permutation(p, rng);
            b = relabelled(a, perm);
        } else {
            b = cnstest::random_graph(p, rng, rng.range(10, 90));
        }
        CHECK((certificate(a) == certificate(b)) == brute_isomorphic(a, b));
    }
}

TEST_CASE("certificate is a valid graph6 string of the same graph") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = cnstest::random_graph(rng.range(1, 9), rng);
        Graph canon = parse_graph6(certificate(g).g6);
        CHECK(brute_isomorphic(g, canon));
        CHECK(certificate(canon) == certificate(g));
    }
}

TEST_CASE("ceiling is enforced") {
    CHECK_THROWS_AS(certificate(Graph(65)), CapabilityError);
    CHECK(certificate(Graph(0)).g6 == "?");
}

TEST_CASE("labelled-graph census by certificate, order 5") {
    // Independent recount: group all 2^10 labelled graphs on 5 vertices by
    // certificate; the class count and class sizes must match the orbit
    // counting (sum over classes of labellings = 1024).
    std::map<std::string, int> classes;
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int bit = 0;
        for (int v = 1; v < 5; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (mask & (1u << bit)) g.add_edge(u, v);
        classes[certificate(g).g6] += 1;
    }
    CHECK(classes.size() == 34);  // graphs on 5 vertices
    long total = 0;
    for (auto& [_, count] : classes) total += count;
    CHECK(total == 1024);
}
