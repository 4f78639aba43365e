#include "cnspectra/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "cnspectra/errors.hpp"
#include "cnspectra/graph6.hpp"

// Canonical labelling by partition refinement with individualization, in the
// style of nauty's search tree. A node is an ordered partition of the vertex
// set; refinement splits cells by neighbour counts against every cell until
// equitable; branching individualizes each vertex of the first non-singleton
// cell. Each discrete leaf yields the adjacency bit string (graph6 bit order)
// of the corresponding labelling; the certificate is the maximum string over
// the tree. Equal-string leaves yield automorphisms, which prune sibling
// branches whose individualized vertex is equivalent under a discovered
// automorphism fixing the current individualization path.

namespace cns {

namespace {

struct Partition {
    // Vertices in partition order; cell_len[i] > 0 iff a cell starts at slot i.
    std::array<uint8_t, 64> order{};
    std::array<uint8_t, 64> cell_len{};
};

struct Searcher {
    int p = 0;
    const uint64_t* adj = nullptr;

    std::vector<uint64_t> best;          // packed best bit string
    std::array<uint8_t, 64> best_label{};  // vertex -> label
    std::array<uint8_t, 64> best_inv{};    // label -> vertex
    bool have_best = false;

    std::vector<std::array<uint8_t, 64>> gens;  // discovered automorphisms
    std::vector<int> path;                      // individualized vertices so far

    static constexpr size_t kMaxGens = 256;

    void refine(Partition& pt) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < p && !changed; ) {
                int slen = pt.cell_len[static_cast<size_t>(s)];
                uint64_t smask = 0;
                for (int i = s; i < s + slen; ++i) smask |= uint64_t{1} << pt.order[static_cast<size_t>(i)];
                for (int c = 0; c < p; ) {
                    int clen = pt.cell_len[static_cast<size_t>(c)];
                    if (clen >= 2 && split_cell(pt, c, clen, smask)) {
                        changed = true;
                        break;
                    }
                    c += clen;
                }
                s += slen;
            }
        }
    }

    // Splits the cell at [c, c+clen) by neighbour count into smask, counts
    // ascending. Returns true if it actually split.
    bool split_cell(Partition& pt, int c, int clen, uint64_t smask) const {
        std::array<uint8_t, 64> cnt{};
        int first = std::popcount(adj[pt.order[static_cast<size_t>(c)]] & smask);
        bool uniform = true;
        for (int i = c; i < c + clen; ++i) {
            int k = std::popcount(adj[pt.order[static_cast<size_t>(i)]] & smask);
            cnt[static_cast<size_t>(i)] = static_cast<uint8_t>(k);
            if (k != first) uniform = false;
        }
        if (uniform) return false;
        std::stable_sort(pt.order.begin() + c, pt.order.begin() + c + clen,
                         [&](uint8_t a, uint8_t b) {
                             return std::popcount(adj[a] & smask) < std::popcount(adj[b] & smask);
                         });
        int start = c;
        for (int i = c + 1; i < c + clen; ++i) {
            if (std::popcount(adj[pt.order[static_cast<size_t>(i)]] & smask) !=
                std::popcount(adj[pt.order[static_cast<size_t>(start)]] & smask)) {
                pt.cell_len[static_cast<size_t>(start)] = static_cast<uint8_t>(i - start);
                start = i;
            }
        }
        pt.cell_len[static_cast<size_t>(start)] = static_cast<uint8_t>(c + clen - start);
        return true;
    }

    std::vector<uint64_t> leaf_string(const Partition& pt) const {
        // order[i] carries new label i; bits in graph6 column order.
        std::array<uint8_t, 64> inv{};
        for (int i = 0; i < p; ++i) inv[static_cast<size_t>(i)] = pt.order[static_cast<size_t>(i)];
        std::vector<uint64_t> s((static_cast<size_t>(p) * (p - 1) / 2 + 63) / 64, 0);
        size_t idx = 0;
        for (int col = 1; col < p; ++col) {
            uint64_t row = adj[inv[static_cast<size_t>(col)]];
            for (int r = 0; r < col; ++r, ++idx)
                if ((row >> inv[static_cast<size_t>(r)]) & 1)
                    s[idx >> 6] |= uint64_t{1} << (63 - (idx & 63));
        }
        return s;
    }

    void process_leaf(const Partition& pt) {
        std::vector<uint64_t> s = leaf_string(pt);
        if (!have_best || s > best) {
            best = std::move(s);
            for (int i = 0; i < p; ++i) {
                best_inv[static_cast<size_t>(i)] = pt.order[static_cast<size_t>(i)];
                best_label[pt.order[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
            }
            have_best = true;
            return;
        }
        if (s == best && gens.size() < kMaxGens) {
            // sigma = best_label^{-1} o current_label is an automorphism.
            std::array<uint8_t, 64> sigma{};
            bool identity = true;
            for (int i = 0; i < p; ++i) {
                uint8_t x = pt.order[static_cast<size_t>(i)];
                sigma[x] = best_inv[static_cast<size_t>(i)];
                if (sigma[x] != x) identity = false;
            }
            if (!identity) gens.push_back(sigma);
        }
    }

    bool usable(const std::array<uint8_t, 64>& sigma) const {
        for (int x : path)
            if (sigma[static_cast<size_t>(x)] != x) return false;
        return true;
    }

    // True if some product of path-fixing generators maps v into `explored`.
    bool equivalent_to_explored(int v, uint64_t explored) const {
        if (gens.empty() || !explored) return false;
        uint64_t reach = uint64_t{1} << v;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& sigma : gens) {
                if (!usable(sigma)) continue;
                uint64_t next = reach;
                uint64_t r = reach;
                while (r) {
                    int x = std::countr_zero(r);
                    r &= r - 1;
                    next |= uint64_t{1} << sigma[static_cast<size_t>(x)];
                }
                if (next != reach) {
                    reach = next;
                    grew = true;
                }
            }
            if (reach & explored) return true;
        }
        return (reach & explored) != 0;
    }

    void search(Partition pt) {
        refine(pt);
        int target = -1;
        for (int c = 0; c < p; c += pt.cell_len[static_cast<size_t>(c)])
            if (pt.cell_len[static_cast<size_t>(c)] >= 2) {
                target = c;
                break;
            }
        if (target < 0) {
            process_leaf(pt);
            return;
        }
        const int tlen = pt.cell_len[static_cast<size_t>(target)];
        std::array<uint8_t, 64> members{};
        for (int i = 0; i < tlen; ++i) members[static_cast<size_t>(i)] = pt.order[static_cast<size_t>(target + i)];

        uint64_t explored = 0;
        for (int i = 0; i < tlen; ++i) {
            int v = members[static_cast<size_t>(i)];
            if (equivalent_to_explored(v, explored)) {
                explored |= uint64_t{1} << v;
                continue;
            }
            Partition child = pt;
            // Move v to the front of its cell as a singleton.
            int pos = target;
            while (child.order[static_cast<size_t>(pos)] != v) ++pos;
            for (int j = pos; j > target; --j)
                child.order[static_cast<size_t>(j)] = child.order[static_cast<size_t>(j - 1)];
            child.order[static_cast<size_t>(target)] = static_cast<uint8_t>(v);
            child.cell_len[static_cast<size_t>(target)] = 1;
            child.cell_len[static_cast<size_t>(target + 1)] = static_cast<uint8_t>(tlen - 1);
            path.push_back(v);
            search(child);
            path.pop_back();
            explored |= uint64_t{1} << v;
        }
    }
};

std::string pack_g6(int p, const std::vector<uint64_t>& bits) {
    std::string out;
    out.push_back(static_cast<char>(p + 63));  // p <= 62 always fits here; p in [0,64] guarded below
    size_t nbits = static_cast<size_t>(p) * (p - 1) / 2;
    int acc = 0, k = 0;
    for (size_t idx = 0; idx < nbits; ++idx) {
        int b = (bits[idx >> 6] >> (63 - (idx & 63))) & 1;
        acc = (acc << 1) | b;
        if (++k == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            k = 0;
        }
    }
    if (k > 0) out.push_back(static_cast<char>((acc << (6 - k)) + 63));
    return out;
}

}  // namespace

namespace detail {

std::string canonical_g6(int p, const uint64_t* rows) {
    if (p < 0 || p > kCertificateMaxOrder)
        throw CapabilityError("canonical form supports at most 64 vertices");
    if (p > 62) {
        // Rare path: let the generic encoder produce the long order field.
        Searcher s;
        s.p = p;
        s.adj = rows;
        Partition root;
        for (int i = 0; i < p; ++i) root.order[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        root.cell_len[0] = static_cast<uint8_t>(p);
        s.search(root);
        Graph g(p);
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if ((rows[s.best_inv[static_cast<size_t>(i)]] >> s.best_inv[static_cast<size_t>(j)]) & 1)
                    g.add_edge(i, j);
        return write_graph6(g);
    }
    if (p == 0) return "?";
    if (p == 1) return "@";
    Searcher s;
    s.p = p;
    s.adj = rows;
    Partition root;
    for (int i = 0; i < p; ++i) root.order[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    root.cell_len[0] = static_cast<uint8_t>(p);
    s.search(root);
    return pack_g6(p, s.best);
}

}  // namespace detail

namespace {

std::vector<uint64_t> row_masks(const Graph& g) {
    std::vector<uint64_t> rows(static_cast<size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        rows[static_cast<size_t>(u)] |= uint64_t{1} << v;
        rows[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }
    return rows;
}

}  // namespace

Certificate certificate(const Graph& g) {
    if (g.order() > kCertificateMaxOrder)
        throw CapabilityError("certificate: graph above the 64-vertex ceiling");
    auto rows = row_masks(g);
    return Certificate{detail::canonical_g6(g.order(), rows.data())};
}

Graph canonical_copy(const Graph& g) {
    return parse_graph6(certificate(g).g6);
}

}  // namespace cns
