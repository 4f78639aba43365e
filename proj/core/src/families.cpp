#include "cnspectra/families.hpp"

#include <set>
#include <string>

#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/recognition.hpp"

namespace cns {

Graph path_graph(int n) {
    if (n < 1) throw InputError("path_graph: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 0) throw InputError("complete_graph: bad order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InputError("complete_bipartite: bad part sizes");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph t_graph(int m) {
    if (m < 2) throw InputError("t_graph: need m >= 2");
    return join(path_graph(m), complete_graph(2));
}

Graph t_prime_graph(int l) {
    if (l < 2 || l % 2 != 0) throw InputError("t_prime_graph: need even l >= 2");
    Graph matching(l);
    for (int i = 0; i < l; i += 2) matching.add_edge(i, i + 1);
    return join(matching, complete_graph(2));
}

Graph b_graph(int l) {
    if (l < 3) throw InputError("b_graph: need l >= 3");
    return join(cycle_graph(l), Graph(2));
}

Graph b_prime_graph(int l) {
    if (l < 3) throw InputError("b_prime_graph: need l >= 3");
    return join(path_graph(l), Graph(2));
}

Graph d_graph(int l) {
    if (l < 1) throw InputError("d_graph: need l >= 1");
    Graph g(2 * l + 1);
    for (int i = 0; i < l; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(0, 2 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

Graph cube_graph() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

Graph icosahedron_graph() {
    // Two apexes over a pentagonal antiprism.
    Graph g(12);
    for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
    for (int i = 6; i <= 10; ++i) g.add_edge(11, i);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 1) % 5);
    }
    return g;
}

Graph s_prime_graph() {
    // x=0, y=1, w1..w3=2..4, z=5.
    Graph g(6);
    for (int w = 2; w <= 4; ++w) {
        g.add_edge(0, w);
        g.add_edge(1, w);
    }
    g.add_edge(5, 2);
    g.add_edge(5, 3);
    return g;
}

namespace {

Graph masked_linear_forest(int m, uint32_t mask) {
    if (m < 2) throw InputError("path-subgraph mask: need m >= 2");
    if (m > 32) throw InputError("path-subgraph mask: m too large");
    if (mask >> (m - 1)) throw InputError("path-subgraph mask: stray bits");
    Graph h(m);
    for (int i = 0; i + 1 < m; ++i)
        if (mask & (uint32_t{1} << i)) h.add_edge(i, i + 1);
    for (int v = 0; v < m; ++v)
        if (h.degree(v) == 0) throw InputError("path-subgraph mask leaves an isolated vertex");
    return h;
}

}  // namespace

Graph t_class_member(int m, uint32_t mask) {
    return join(masked_linear_forest(m, mask), complete_graph(2));
}

Graph r_class_member(int l, uint32_t mask) {
    if (l < 3) throw InputError("r_class_member: need l >= 3");
    return join(masked_linear_forest(l, mask), complete_graph(1));
}

std::vector<Graph> tclass_members(int m) {
    if (m < 2 || m > 16) throw InputError("tclass_members: m out of range");
    std::vector<Graph> out;
    std::set<std::string> seen;
    const uint32_t top = uint32_t{1} << (m - 1);
    for (uint32_t mask = 0; mask < top; ++mask) {
        bool covered = true;
        for (int v = 0; v < m && covered; ++v) {
            bool left = v > 0 && (mask & (uint32_t{1} << (v - 1)));
            bool right = v + 1 < m && (mask & (uint32_t{1} << v));
            covered = left || right;
        }
        if (!covered) continue;
        Graph g = t_class_member(m, mask);
        if (seen.insert(certificate(g).g6).second) out.push_back(std::move(g));
    }
    return out;
}

Graph construct_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::T: return t_graph(spec.param);
        case K::Tprime: return t_prime_graph(spec.param);
        case K::Tclass: return t_class_member(spec.param, spec.mask);
        case K::B: return b_graph(spec.param);
        case K::Bprime: return b_prime_graph(spec.param);
        case K::D: return d_graph(spec.param);
        case K::Rclass: return r_class_member(spec.param, spec.mask);
        case K::K2l:
            if (spec.param < 1) throw InputError("K_{2,l}: need l >= 1");
            return complete_bipartite(2, spec.param);
        case K::Cycle: return cycle_graph(spec.param);
        case K::Path: return path_graph(spec.param);
        case K::Cube: return cube_graph();
        case K::Icosahedron: return icosahedron_graph();
        case K::Sprime: return s_prime_graph();
        case K::S: return s_graph(spec.param);
    }
    throw InputError("construct_family: unknown kind");
}

}  // namespace cns
