#include "cnspectra/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace cns {

namespace {

// Biconnected components as edge lists, via the classic lowpoint DFS.
struct BicompSplitter {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> comps;
    int counter = 0;

    explicit BicompSplitter(const Graph& gr)
        : g(gr), num(static_cast<size_t>(gr.order()), -1), low(static_cast<size_t>(gr.order()), 0) {}

    void run() {
        for (int v = 0; v < g.order(); ++v)
            if (num[static_cast<size_t>(v)] < 0) dfs(v, -1);
    }

    void dfs(int v, int parent) {
        num[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
        bool skipped_parent = false;
        std::vector<int> nb = g.neighbour_list(v);
        for (int w : nb) {
            if (w == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (num[static_cast<size_t>(w)] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= num[static_cast<size_t>(v)]) {
                    comps.emplace_back();
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        comps.back().push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                }
            } else if (num[static_cast<size_t>(w)] < num[static_cast<size_t>(v)]) {
                stack.emplace_back(v, w);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], num[static_cast<size_t>(w)]);
            }
        }
    }
};

// Demoucron face addition on one biconnected graph.
struct Demoucron {
    const Graph& b;
    std::vector<bool> in_h;                         // vertex embedded?
    std::vector<std::vector<bool>> edge_in_h;       // edge embedded?
    std::vector<std::vector<int>> faces;            // boundary cycles
    int embedded_edges = 0;

    explicit Demoucron(const Graph& graph)
        : b(graph),
          in_h(static_cast<size_t>(graph.order()), false),
          edge_in_h(static_cast<size_t>(graph.order()),
                    std::vector<bool>(static_cast<size_t>(graph.order()), false)) {}

    void add_h_edge(int u, int v) {
        if (!edge_in_h[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
            edge_in_h[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
            edge_in_h[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
            ++embedded_edges;
        }
    }

    // Recursive DFS: in an undirected DFS every visited non-parent neighbour
    // is an ancestor, so the first such edge closes a cycle.
    bool cycle_dfs(int v, int par, std::vector<int>& parent, std::vector<int>& depth,
                   std::vector<int>& out) const {
        depth[static_cast<size_t>(v)] = (par < 0) ? 0 : depth[static_cast<size_t>(par)] + 1;
        parent[static_cast<size_t>(v)] = par;
        std::vector<int> nb = b.neighbour_list(v);
        for (int w : nb) {
            if (w == par) continue;
            if (depth[static_cast<size_t>(w)] >= 0) {
                if (depth[static_cast<size_t>(w)] < depth[static_cast<size_t>(v)]) {
                    for (int x = v; x != w; x = parent[static_cast<size_t>(x)]) out.push_back(x);
                    out.push_back(w);
                    return true;
                }
                continue;
            }
            if (cycle_dfs(w, v, parent, depth, out)) return true;
        }
        return false;
    }

    std::vector<int> find_cycle() const {
        std::vector<int> parent(static_cast<size_t>(b.order()), -2);
        std::vector<int> depth(static_cast<size_t>(b.order()), -1);
        std::vector<int> out;
        cycle_dfs(0, -1, parent, depth, out);
        return out;
    }

    struct Fragment {
        std::vector<int> attachments;
        std::vector<int> interior;  // unembedded component, empty for chord fragments
        int chord_u = -1, chord_v = -1;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        const int p = b.order();
        // Chord fragments: unembedded edges between embedded vertices.
        for (int u = 0; u < p; ++u) {
            if (!in_h[static_cast<size_t>(u)]) continue;
            b.neighbours(u).for_each([&](int v) {
                if (u < v && in_h[static_cast<size_t>(v)] && !edge_in_h[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    Fragment f;
                    f.attachments = {u, v};
                    f.chord_u = u;
                    f.chord_v = v;
                    out.push_back(std::move(f));
                }
            });
        }
        // Bridge fragments: components of the unembedded vertices.
        std::vector<bool> seen(static_cast<size_t>(p), false);
        for (int s = 0; s < p; ++s) {
            if (in_h[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
            Fragment f;
            std::vector<int> queue{s};
            seen[static_cast<size_t>(s)] = true;
            std::vector<bool> attach_seen(static_cast<size_t>(p), false);
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                f.interior.push_back(v);
                b.neighbours(v).for_each([&](int w) {
                    if (in_h[static_cast<size_t>(w)]) {
                        if (!attach_seen[static_cast<size_t>(w)]) {
                            attach_seen[static_cast<size_t>(w)] = true;
                            f.attachments.push_back(w);
                        }
                    } else if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = true;
                        queue.push_back(w);
                    }
                });
            }
            out.push_back(std::move(f));
        }
        return out;
    }

    bool face_admits(const std::vector<int>& face, const std::vector<int>& attachments) const {
        for (int a : attachments)
            if (std::find(face.begin(), face.end(), a) == face.end()) return false;
        return true;
    }

    // Path between two attachments whose interior lies in the fragment.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord_u >= 0) return {f.chord_u, f.chord_v};
        const int p = b.order();
        std::vector<bool> in_frag(static_cast<size_t>(p), false);
        for (int v : f.interior) in_frag[static_cast<size_t>(v)] = true;
        std::vector<bool> is_attach(static_cast<size_t>(p), false);
        for (int a : f.attachments) is_attach[static_cast<size_t>(a)] = true;

        int start = f.attachments[0];
        std::vector<int> parent(static_cast<size_t>(p), -2);
        parent[static_cast<size_t>(start)] = -1;
        std::vector<int> queue{start};
        size_t head = 0;
        int hit = -1;
        while (head < queue.size() && hit < 0) {
            int v = queue[head++];
            std::vector<int> nb = b.neighbour_list(v);
            for (int w : nb) {
                if (parent[static_cast<size_t>(w)] != -2) continue;
                // The first step must enter the fragment; direct attachment-to-
                // attachment edges are chord fragments of their own.
                if (v == start && !in_frag[static_cast<size_t>(w)]) continue;
                if (in_frag[static_cast<size_t>(w)]) {
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                } else if (is_attach[static_cast<size_t>(w)]) {
                    parent[static_cast<size_t>(w)] = v;
                    hit = w;
                    break;
                }
            }
        }
        assert(hit >= 0);
        std::vector<int> path;
        for (int x = hit; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    }

    void embed_path(const std::vector<int>& path, size_t face_idx) {
        const std::vector<int> face = faces[static_cast<size_t>(face_idx)];
        int a = path.front(), z = path.back();
        size_t ia = static_cast<size_t>(std::find(face.begin(), face.end(), a) - face.begin());
        size_t iz = static_cast<size_t>(std::find(face.begin(), face.end(), z) - face.begin());
        assert(ia < face.size() && iz < face.size());

        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) add_h_edge(path[i], path[i + 1]);
        for (int v : interior) in_h[static_cast<size_t>(v)] = true;

        auto arc = [&](size_t from, size_t to) {  // face[from..to] walking forward, inclusive
            std::vector<int> out;
            for (size_t i = from;; i = (i + 1) % face.size()) {
                out.push_back(face[i]);
                if (i == to) break;
            }
            return out;
        };
        std::vector<int> f1 = arc(ia, iz);
        for (auto it = interior.rbegin(); it != interior.rend(); ++it) f1.push_back(*it);
        std::vector<int> f2 = arc(iz, ia);
        for (int v : interior) f2.push_back(v);

        faces[static_cast<size_t>(face_idx)] = std::move(f1);
        faces.push_back(std::move(f2));
    }

    bool run() {
        const int p = b.order();
        const int q = b.size();
        if (p >= 3 && q > 3 * p - 6) return false;

        std::vector<int> cycle = find_cycle();
        assert(static_cast<int>(cycle.size()) >= 3);
        for (size_t i = 0; i < cycle.size(); ++i) {
            in_h[static_cast<size_t>(cycle[i])] = true;
            add_h_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        faces.push_back(cycle);
        faces.push_back(cycle);

        while (embedded_edges < q) {
            std::vector<Fragment> frags = fragments();
            assert(!frags.empty());
            int pick = -1;
            size_t pick_face = 0;
            for (size_t i = 0; i < frags.size(); ++i) {
                int admissible = 0;
                size_t last = 0;
                for (size_t fi = 0; fi < faces.size(); ++fi)
                    if (face_admits(faces[fi], frags[i].attachments)) {
                        ++admissible;
                        last = fi;
                    }
                if (admissible == 0) return false;
                if (admissible == 1) {
                    pick = static_cast<int>(i);
                    pick_face = last;
                    break;
                }
                if (pick < 0) {
                    pick = static_cast<int>(i);
                    pick_face = last;
                }
            }
            embed_path(alpha_path(frags[static_cast<size_t>(pick)]), pick_face);
        }
        assert(static_cast<int>(faces.size()) == q - p + 2);
        return true;
    }
};

}  // namespace

bool is_planar(const Graph& g) {
    const int p = g.order();
    if (p <= 4) return true;
    if (g.size() > 3 * p - 6) return false;

    BicompSplitter split(g);
    split.run();
    for (const auto& comp : split.comps) {
        if (comp.size() <= 2) continue;
        // Local reindex of the component.
        std::vector<int> verts;
        std::vector<int> local(static_cast<size_t>(p), -1);
        for (auto [u, v] : comp) {
            if (local[static_cast<size_t>(u)] < 0) {
                local[static_cast<size_t>(u)] = static_cast<int>(verts.size());
                verts.push_back(u);
            }
            if (local[static_cast<size_t>(v)] < 0) {
                local[static_cast<size_t>(v)] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        }
        Graph sub(static_cast<int>(verts.size()));
        for (auto [u, v] : comp) sub.add_edge(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]);
        Demoucron d(sub);
        if (!d.run()) return false;
    }
    return true;
}

}  // namespace cns
