#include "cnspectra/enumerate.hpp"

#include <cstdint>
#include <string>
#include <unordered_set>

#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/recognition.hpp"

namespace cns {

namespace {

Graph from_rows(int p, const uint64_t* rows) {
    Graph g(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            if ((rows[u] >> v) & 1) g.add_edge(u, v);
    return g;
}

bool rows_connected(int p, const uint64_t* rows) {
    if (p <= 1) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= rows[v];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == (p == 64 ? ~uint64_t{0} : (uint64_t{1} << p) - 1);
}

}  // namespace

bool filter_accepts(const GraphFilter& f, const Graph& g) {
    if (f.connected && !is_connected(g)) return false;
    if ((f.planar || f.polyhedral || f.triangulation) && !is_planar(g)) return false;
    if (f.outerplanar && !is_outerplanar(g)) return false;
    if (f.polyhedral && !is_polyhedron(g)) return false;
    if (f.triangulation && (g.order() < 3 || g.size() != 3 * g.order() - 6)) return false;
    return true;
}

void enumerate_graphs(int p, const GraphFilter& filter, const std::function<void(const Graph&)>& sink) {
    if (p < 1 || p > 9) throw InputError("enumerate_graphs: built-in generation covers 1 <= p <= 9");

    // Hereditary predicates prune every level; the full filter runs at the top.
    const bool prune_planar = filter.planar || filter.polyhedral || filter.triangulation;
    const bool prune_outer = filter.outerplanar;

    std::vector<std::vector<uint64_t>> level;  // row masks, p_cur rows per graph
    level.push_back({});                       // the single graph on one vertex is row mask 0
    level.back().push_back(0);

    for (int cur = 1; cur < p; ++cur) {
        std::vector<std::vector<uint64_t>> next;
        std::unordered_set<std::string> seen;
        uint64_t child[10];
        for (const auto& parent : level) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << cur); ++mask) {
                for (int v = 0; v < cur; ++v)
                    child[v] = parent[static_cast<size_t>(v)] | (((mask >> v) & 1) << cur);
                child[cur] = mask;
                std::string cert = detail::canonical_g6(cur + 1, child);
                if (!seen.insert(cert).second) continue;
                Graph g = from_rows(cur + 1, child);
                if (prune_planar && !is_planar(g)) continue;
                if (prune_outer && !is_outerplanar(g)) continue;
                next.emplace_back(child, child + cur + 1);
            }
        }
        level = std::move(next);
    }

    for (const auto& rows : level) {
        if (filter.connected && !rows_connected(p, rows.data())) continue;
        Graph g = from_rows(p, rows.data());
        if (filter_accepts(filter, g)) sink(g);
    }
}

std::vector<Graph> enumerate_graphs(int p, const GraphFilter& filter) {
    std::vector<Graph> out;
    enumerate_graphs(p, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace cns
