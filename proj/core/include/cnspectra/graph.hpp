#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cnspectra/bitset.hpp"

namespace cns {

/// Simple undirected graph on densely indexed vertices 0..p-1.
/// Neighbour sets are bit sets, so common-neighbourhood queries are word-wise ANDs.
/// Graphs are treated as immutable once built; every query below is const and
/// safe to run concurrently on shared instances.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return p_; }  // p
    int size() const { return q_; }   // q

    /// Adds {u,v}; rejects loops and out-of-range indices, ignores duplicates.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const;
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    int max_degree() const;  // Delta; 0 for the empty graph
    const Bitset& neighbours(int v) const { return adj_[static_cast<size_t>(v)]; }
    std::vector<int> neighbour_list(int v) const { return adj_[static_cast<size_t>(v)].to_vector(); }

    std::vector<std::pair<int, int>> edges() const;
    std::set<int> degree_set() const;

    /// Induced subgraph on `keep` (vertices renumbered in the order given).
    Graph induced(std::span<const int> keep) const;

    bool operator==(const Graph&) const = default;  // labelled equality

private:
    int p_ = 0;
    int q_ = 0;
    std::vector<Bitset> adj_;
};

/// N(u_1,...,u_k): vertices adjacent to every entry of `tuple`.
/// The result is always disjoint from the tuple. Throws InputError on an
/// empty tuple, a repeated entry, or an out-of-range index.
Bitset common_neighbourhood_set(const Graph& g, std::span<const int> tuple);
std::vector<int> common_neighbourhood(const Graph& g, std::span<const int> tuple);

/// Disjoint union; vertices of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join a + b: disjoint union plus every edge between the two parts.
Graph join(const Graph& a, const Graph& b);

/// Relabel: vertex v of g becomes perm[v] in the result.
Graph relabelled(const Graph& g, std::span<const int> perm);

}  // namespace cns
