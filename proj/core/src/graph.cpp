#include "cnspectra/graph.hpp"

#include <algorithm>
#include <string>

#include "cnspectra/errors.hpp"

namespace cns {

Graph::Graph(int order) {
    if (order < 0) throw InputError("graph order must be non-negative");
    p_ = order;
    adj_.assign(static_cast<size_t>(order), Bitset(order));
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= p_ || v >= p_)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loops are not allowed");
    if (adj_[static_cast<size_t>(u)].test(v)) return;
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    ++q_;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= p_ || v >= p_)
        throw InputError("vertex index out of range");
    return adj_[static_cast<size_t>(u)].test(v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < p_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(q_));
    for (int u = 0; u < p_; ++u)
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::set<int> Graph::degree_set() const {
    std::set<int> out;
    for (int v = 0; v < p_; ++v) out.insert(degree(v));
    return out;
}

Graph Graph::induced(std::span<const int> keep) const {
    std::vector<int> newindex(static_cast<size_t>(p_), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= p_) throw InputError("induced: vertex out of range");
        if (newindex[static_cast<size_t>(v)] != -1) throw InputError("induced: repeated vertex");
        newindex[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        adj_[static_cast<size_t>(keep[i])].for_each([&](int v) {
            int j = newindex[static_cast<size_t>(v)];
            if (j > static_cast<int>(i)) g.add_edge(static_cast<int>(i), j);
        });
    return g;
}

Bitset common_neighbourhood_set(const Graph& g, std::span<const int> tuple) {
    if (tuple.empty()) throw InputError("common neighbourhood of an empty tuple");
    Bitset seen(g.order());
    for (int v : tuple) {
        if (v < 0 || v >= g.order()) throw InputError("tuple entry out of range");
        if (seen.test(v)) throw InputError("tuple entries must be distinct");
        seen.set(v);
    }
    Bitset acc = g.neighbours(tuple[0]);
    for (size_t i = 1; i < tuple.size(); ++i) acc &= g.neighbours(tuple[i]);
    return acc;
}

std::vector<int> common_neighbourhood(const Graph& g, std::span<const int> tuple) {
    return common_neighbourhood_set(g, tuple).to_vector();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph relabelled(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InputError("relabelled: bad permutation size");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    if (out.size() != g.size()) throw InputError("relabelled: not a permutation");
    return out;
}

}  // namespace cns
