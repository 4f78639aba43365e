#pragma once

#include <optional>
#include <string>

#include "cnspectra/connectivity.hpp"
#include "cnspectra/graph.hpp"
#include "cnspectra/planarity.hpp"

namespace cns {

bool is_outerplanar(const Graph& g);  // g plus a dominating apex stays planar
bool is_polyhedron(const Graph& g);   // planar, 3-connected, p >= 4

/// Membership in the T class: an adjacent dominating pair x,y whose removal
/// leaves a disjoint union of paths on >= 2 vertices each (a spanning
/// isolated-vertex-free subgraph of P_{p-2}).
struct TRecognition {
    int m = 0;                 // p - 2
    bool full_path = false;    // remainder is P_m itself (the graph is T_m)
    bool perfect_matching = false;  // remainder is a perfect matching (T'_m)
};
std::optional<TRecognition> recognize_T(const Graph& g);

/// Membership in the Q class: planar, and the returned m is the least
/// integer in [3, Delta] such that every vertex of degree >= m has another
/// vertex with exactly the same (open) neighbourhood.
std::optional<int> recognize_Q(const Graph& g);

/// Is g of the form H + K_1 with H a disjoint union of paths on >= 2
/// vertices (the R class)? Returns l = p - 1 >= 3 on success.
std::optional<int> recognize_R(const Graph& g);

struct FamilyLabel {
    enum class Kind {
        T, Tprime, Tclass, Q, B, Bprime, D, Rclass, K2l,
        S, Sprime, Cube, Icosahedron, Cycle, Path, None,
    };
    Kind kind = Kind::None;
    int param = 0;  // m / l / k where applicable

    bool operator==(const FamilyLabel&) const = default;
};

/// Structural identification against every named family, most specific first.
FamilyLabel recognize_family(const Graph& g);

std::string to_string(const FamilyLabel& label);

/// The graphs S_3..S_9 (recovered by exhaustive derivation and committed as
/// canonical-form data; see derive_s_graphs). Throws InputError for k
/// outside 3..9.
Graph s_graph(int k);
const std::string& s_graph_g6(int k);

}  // namespace cns
