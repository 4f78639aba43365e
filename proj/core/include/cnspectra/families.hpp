#pragma once

#include <cstdint>
#include <vector>

#include "cnspectra/graph.hpp"

namespace cns {

// Basic builders.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Named constructions.
Graph t_graph(int m);        // T_m = P_m + K_2, m >= 2 (T_2 = K_4)
Graph t_prime_graph(int l);  // T'_l = (l/2 disjoint K_2) + K_2, even l >= 2
Graph b_graph(int l);        // bipyramid B_l = C_l + complement(K_2), l >= 3
Graph b_prime_graph(int l);  // B'_l = P_l + complement(K_2), l >= 3
Graph d_graph(int l);        // l triangles sharing one vertex, l >= 1
Graph cube_graph();
Graph icosahedron_graph();
Graph s_prime_graph();  // 6 vertices: x,y joined to w1,w2,w3; z joined to w1,w2

/// Member of the T class: H + K_2 where H is the spanning subgraph of P_m
/// keeping the path edges selected by `mask` (bit i = edge {i, i+1}).
/// Every vertex of H must keep at least one incident edge.
Graph t_class_member(int m, uint32_t mask);

/// Member of the R class: H + K_1 with H as above, l >= 3.
Graph r_class_member(int l, uint32_t mask);

/// All members of the T_m class up to isomorphism, certificate-deduped,
/// in a deterministic order. 2 <= m <= 16.
std::vector<Graph> tclass_members(int m);

/// Declarative form used by the CLI.
struct FamilySpec {
    enum class Kind {
        T, Tprime, Tclass, B, Bprime, D, Rclass, K2l, Cycle, Path,
        Cube, Icosahedron, Sprime, S,
    };
    Kind kind;
    int param = 0;       // m / l / k
    uint32_t mask = 0;   // Tclass / Rclass edge mask
};

Graph construct_family(const FamilySpec& spec);

}  // namespace cns
