#pragma once

#include <cstdint>
#include <set>

#include "cnspectra/graph.hpp"

namespace cns {

/// Target for the pair-spectrum generators: A_2(G) = base + A'.
struct A2Target {
    enum class Base { OneTwo, ZeroOneTwo, ZeroTwo };
    Base base = Base::OneTwo;
    std::set<int> a_prime;  // values >= 3

    bool operator==(const A2Target&) const = default;
};

/// Target for the degree-set generator: A_1(G) = degrees, min(degrees) <= 5.
struct A1Target {
    std::set<int> degrees;
};

/// Dominating-apex construction for bases {1,2} and {0,1,2}: a cone over a
/// 4-cycle-free outerplanar graph whose high degrees realize A'.
/// Output is planar, connected, with A_2 = base + A'.
Graph gen_a2_cone(const A2Target& target, uint64_t seed);

/// Chained-K_{2,a} construction for base {0,2}. A' must be a non-empty set of
/// integers >= 3 other than {3} (those targets have no infinite family);
/// throws TargetError otherwise.
Graph gen_a2_02(const std::set<int>& a_prime, uint64_t seed);

/// Dispatches on target.base.
Graph gen_a2(const A2Target& target, uint64_t seed);

/// Caterpillar plus a closing transformation keyed by a = min(degrees):
/// nothing (a=1), leaf matching (a=2), leaf cycle (a=3), leaf cycle with
/// 4-leaf cap vertices (a=4), leaf cycle with 10-leaf 12-vertex caps (a=5).
/// Output is planar and connected with A_1 = degrees; outerplanar for
/// a <= 2, 3-connected for a >= 3. Throws TargetError when min(degrees) > 5.
Graph gen_a1(const A1Target& target, uint64_t seed);

}  // namespace cns
