#include "cnspectra/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cnspectra/brute.hpp"
#include "cnspectra/connectivity.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/planarity.hpp"
#include "cnspectra/rng.hpp"

namespace cns {

namespace {

[[noreturn]] void construction_bug(const std::string& what) {
    throw std::logic_error("generator produced a wrong graph (" + what + ")");
}

// Incremental builder: components are added as fresh vertex blocks.
struct Assembly {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg;
    int vertices = 0;

    int fresh(int k) {
        int base = vertices;
        vertices += k;
        deg.resize(static_cast<size_t>(vertices), 0);
        return base;
    }
    void edge(int u, int v) {
        edges.emplace_back(u, v);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    std::vector<int> degree_one() const {
        std::vector<int> out;
        for (int v = 0; v < vertices; ++v)
            if (deg[static_cast<size_t>(v)] == 1) out.push_back(v);
        return out;
    }
    Graph build() const { return Graph::from_edges(vertices, edges); }
};

// Star K_{1,deg}; returns (centre, first leaf).
std::pair<int, int> add_star(Assembly& a, int deg) {
    int base = a.fresh(deg + 1);
    for (int i = 1; i <= deg; ++i) a.edge(base, base + i);
    return {base, base + 1};
}

int add_path(Assembly& a, int len) {  // returns first vertex
    int base = a.fresh(len);
    for (int i = 0; i + 1 < len; ++i) a.edge(base + i, base + i + 1);
    return base;
}

int add_cycle(Assembly& a, int len) {
    int base = add_path(a, len);
    a.edge(base, base + len - 1);
    return base;
}

}  // namespace

Graph gen_a2_cone(const A2Target& target, uint64_t seed) {
    if (target.base == A2Target::Base::ZeroTwo)
        throw InputError("gen_a2_cone: base {0,2} is handled by gen_a2_02");
    for (int v : target.a_prime)
        if (v < 3) throw InputError("gen_a2_cone: A' values must be >= 3");

    SplitMix64 rng(seed ^ 0x636f6e65);  // "cone"
    Assembly a;

    if (!target.a_prime.empty()) {
        // One star per target degree, then seed-chosen growth that never
        // leaves {1,2} outside the star centres: extra stars, extra path
        // components, leaf-to-leaf links between the first stars, and tails
        // grown from leaves.
        std::vector<int> degs(target.a_prime.begin(), target.a_prime.end());
        std::vector<int> leaf_pool;
        rng.shuffle(degs);
        for (int d : degs) leaf_pool.push_back(add_star(a, d).second);
        int extras = rng.range(0, 3);
        for (int i = 0; i < extras; ++i)
            add_star(a, degs[static_cast<size_t>(rng.below(degs.size()))]);
        int paths = rng.range(0, 3);
        for (int i = 0; i < paths; ++i) add_path(a, rng.range(2, 6));
        // Disjoint pairs keep the linked leaves at degree exactly 2.
        int max_pairs = static_cast<int>(leaf_pool.size()) / 2;
        int links = max_pairs > 0 ? rng.range(0, max_pairs) : 0;
        for (int i = 0; i < links; ++i)
            a.edge(leaf_pool[static_cast<size_t>(2 * i)], leaf_pool[static_cast<size_t>(2 * i + 1)]);
        int tails = rng.range(0, 4);
        for (int i = 0; i < tails; ++i) {
            std::vector<int> leaves = a.degree_one();
            if (leaves.empty()) break;
            int at = leaves[static_cast<size_t>(rng.below(leaves.size()))];
            int len = rng.range(1, 3);
            int base = a.fresh(len);
            a.edge(at, base);
            for (int k = 0; k + 1 < len; ++k) a.edge(base + k, base + k + 1);
        }
    } else {
        // Degrees stay <= 2: paths and cycles of length != 4. The first
        // component supplies both a 0-pair and a 1-pair.
        if (rng.coin())
            add_path(a, rng.range(3, 6));
        else
            add_cycle(a, 5 + rng.range(0, 2));
        int extra = rng.range(0, 2);
        for (int i = 0; i < extra; ++i) {
            if (rng.coin())
                add_path(a, rng.range(2, 5));
            else
                add_cycle(a, rng.coin() ? 3 : rng.range(5, 7));
        }
    }
    if (target.base == A2Target::Base::ZeroOneTwo) a.fresh(1 + rng.range(0, 1));

    Graph core = a.build();
    auto core_a2 = brute_a_set(core, 2).values;
    if (core_a2 != std::set<int>{0, 1}) construction_bug("cone base must have A_2 = {0,1}");

    Graph g = join(core, complete_graph(1));

    std::set<int> want = target.a_prime;
    want.insert(1);
    want.insert(2);
    if (target.base == A2Target::Base::ZeroOneTwo) want.insert(0);
    if (brute_a_set(g, 2).values != want) construction_bug("cone A_2 target missed");
    return g;
}

Graph gen_a2_02(const std::set<int>& a_prime, uint64_t seed) {
    if (a_prime.empty() || a_prime == std::set<int>{3})
        throw TargetError("gen_a2_02: A' = {} and A' = {3} admit no infinite {0,2}+A' family");
    for (int v : a_prime)
        if (v < 3) throw InputError("gen_a2_02: A' values must be >= 3");

    SplitMix64 rng(seed ^ 0x303274);  // "02t"
    const bool has3 = a_prime.count(3) > 0;

    // Layer sizes: values >= 4 in any order, optional repeats for variety;
    // a layer of size 3 leaves only one anchor vertex, so 3 goes first or last.
    std::vector<int> big(a_prime.begin(), a_prime.end());
    std::erase(big, 3);
    const size_t base_count = big.size();
    int planned = 2 + (has3 ? 3 : 0);
    for (size_t i = 0; i < big.size(); ++i)
        planned += i == 0 && !has3 ? big[i] : big[i] - 2;
    int extras = rng.range(2, 14);
    for (int i = 0; i < extras && base_count > 0; ++i) {
        int v = big[rng.below(base_count)];
        if (planned + v - 2 > 56) break;  // keep outputs certificate-sized
        big.push_back(v);
        planned += v - 2;
    }
    rng.shuffle(big);

    std::vector<int> layers = big;
    if (has3) {
        if (rng.coin())
            layers.insert(layers.begin(), 3);
        else
            layers.push_back(3);
    }

    Assembly a;
    int anchor1 = a.fresh(2), anchor2 = anchor1 + 1;
    for (size_t j = 0; j < layers.size(); ++j) {
        int width = layers[j] - (j == 0 ? 0 : 2);
        int base = a.fresh(width);
        for (int i = 0; i < width; ++i) {
            a.edge(anchor1, base + i);
            a.edge(anchor2, base + i);
        }
        anchor1 = base;
        anchor2 = base + 1;  // width >= 2 except possibly at the very end
    }

    Graph g = a.build();
    std::set<int> want = a_prime;
    want.insert(0);
    want.insert(2);
    if (brute_a_set(g, 2).values != want) construction_bug("chained K_{2,a} A_2 target missed");
    return g;
}

Graph gen_a2(const A2Target& target, uint64_t seed) {
    if (target.base == A2Target::Base::ZeroTwo) return gen_a2_02(target.a_prime, seed);
    return gen_a2_cone(target, seed);
}

Graph gen_a1(const A1Target& target, uint64_t seed) {
    const std::set<int>& degrees = target.degrees;
    if (degrees.empty()) throw InputError("gen_a1: empty degree set");
    for (int d : degrees)
        if (d < 1) throw InputError("gen_a1: degrees must be positive");
    const int a = *degrees.begin();
    if (a > 5) throw TargetError("gen_a1: a planar graph has a vertex of degree at most 5");

    if (degrees == std::set<int>{1}) return path_graph(2);  // the only connected realization

    SplitMix64 rng(seed ^ 0x613174);  // "a1t"

    // Spine targets: every degree >= 2 at least once, seed extras, parity
    // fixers so the leaf count fits the closing transformation.
    std::vector<int> spine;
    for (int d : degrees)
        if (d >= 2) spine.push_back(d);
    std::vector<int> pool = spine;
    int extras = rng.range(0, 3);
    for (int i = 0; i < extras; ++i)
        spine.push_back(pool[static_cast<size_t>(rng.below(pool.size()))]);
    rng.shuffle(spine);

    auto leaf_count = [&]() {
        int p1 = 2;
        for (int d : spine) p1 += d - 2;
        return p1;
    };

    if (a == 2 || a == 4) {
        // Even number of odd spine degrees makes the leaf count even.
        int odd = 0;
        for (int d : spine) odd += d % 2;
        if (odd % 2 == 1) {
            int fix = 0;
            for (int d : degrees)
                if (d % 2 == 1 && d >= 2) fix = d;
            if (fix == 0) construction_bug("odd leaf parity without an odd degree");
            spine.push_back(fix);
        }
        if (a == 4 && leaf_count() % 4 != 0) spine.push_back(4);  // +2 leaves
        if (a == 4 && leaf_count() % 4 != 0) construction_bug("leaf count not divisible by 4");
    }
    if (a == 5)
        while (leaf_count() % 10 != 0) spine.push_back(5);  // +3 leaves each; gcd(3,10)=1

    // Caterpillar: spine path, pendant leaves up to each target degree.
    Assembly asm_;
    const int t = static_cast<int>(spine.size());
    int s0 = asm_.fresh(t);
    for (int i = 0; i + 1 < t; ++i) asm_.edge(s0 + i, s0 + i + 1);
    std::vector<int> leaves;
    for (int i = 0; i < t; ++i) {
        int spine_edges = (t == 1) ? 0 : (i == 0 || i == t - 1 ? 1 : 2);
        int want = spine[static_cast<size_t>(i)] - spine_edges;
        if (want < 0) construction_bug("spine degree below its path degree");
        int base = asm_.fresh(want);
        for (int k = 0; k < want; ++k) {
            asm_.edge(s0 + i, base + k);
            leaves.push_back(base + k);
        }
    }
    const int p1 = static_cast<int>(leaves.size());
    if (p1 != leaf_count()) construction_bug("leaf bookkeeping");

    if (a == 2) {
        if (p1 % 2 != 0) construction_bug("odd leaf count for matching");
        for (int i = 0; i + 1 < p1; i += 2)
            asm_.edge(leaves[static_cast<size_t>(i)], leaves[static_cast<size_t>(i + 1)]);
    } else if (a >= 3) {
        if (p1 < 3) construction_bug("too few leaves for a cycle");
        for (int i = 0; i < p1; ++i)
            asm_.edge(leaves[static_cast<size_t>(i)], leaves[static_cast<size_t>((i + 1) % p1)]);
        if (a == 4) {
            for (int gbase = 0; gbase < p1; gbase += 4) {
                int apex = asm_.fresh(1);
                for (int i = 0; i < 4; ++i) asm_.edge(apex, leaves[static_cast<size_t>(gbase + i)]);
            }
        } else if (a == 5) {
            for (int gbase = 0; gbase < p1; gbase += 10) {
                // Ring of ten degree-5 vertices over the group, two 5-spoke hubs.
                int ring = asm_.fresh(10);
                int hub = asm_.fresh(2);
                for (int i = 0; i < 10; ++i) {
                    asm_.edge(ring + i, ring + (i + 1) % 10);
                    asm_.edge(ring + i, leaves[static_cast<size_t>(gbase + i)]);
                    asm_.edge(ring + i, leaves[static_cast<size_t>(gbase + (i + 1) % 10)]);
                    asm_.edge(ring + i, hub + (i < 5 ? 0 : 1));
                }
            }
        }
    }

    Graph g = asm_.build();
    if (g.degree_set() != degrees) construction_bug("degree set missed");
    if (!is_planar(g)) construction_bug("non-planar output");
    if (!is_connected(g)) construction_bug("disconnected output");
    return g;
}

}  // namespace cns
