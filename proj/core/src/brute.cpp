#include "cnspectra/brute.hpp"

#include <algorithm>
#include <vector>

#include "cnspectra/errors.hpp"

namespace cns {

namespace {

std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(static_cast<size_t>(g.order()),
                                     std::vector<bool>(static_cast<size_t>(g.order()), false));
    for (auto [u, v] : g.edges()) {
        m[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        m[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }
    return m;
}

void subsets_rec(int p, int n, int from, std::vector<int>& cur,
                 const std::vector<std::vector<bool>>& m, std::set<int>& out) {
    if (static_cast<int>(cur.size()) == n) {
        int count = 0;
        for (int w = 0; w < p; ++w) {
            bool all = true;
            for (int u : cur)
                if (!m[static_cast<size_t>(w)][static_cast<size_t>(u)]) {
                    all = false;
                    break;
                }
            if (all) ++count;
        }
        out.insert(count);
        return;
    }
    for (int v = from; v < p; ++v) {
        cur.push_back(v);
        subsets_rec(p, n, v + 1, cur, m, out);
        cur.pop_back();
    }
}

}  // namespace

Spectrum brute_a_set(const Graph& g, int n) {
    if (n < 1) throw InputError("brute_a_set: n must be positive");
    Spectrum s;
    s.n = n;
    if (g.order() < n) return s;
    auto m = matrix(g);
    std::vector<int> cur;
    subsets_rec(g.order(), n, 0, cur, m, s.values);
    return s;
}

Profile brute_profile(const Graph& g) {
    Profile pr;
    pr.order = g.order();
    for (int n = 1; n <= g.order(); ++n) pr.by_n.push_back(brute_a_set(g, n));
    return pr;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used, int u) {
    if (u == a.order()) return true;
    for (int v = 0; v < b.order(); ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        if (a.degree(u) != b.degree(v)) continue;
        bool ok = true;
        for (int w = 0; w < u; ++w)
            if (a.adjacent(u, w) != b.adjacent(v, map[static_cast<size_t>(w)])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[static_cast<size_t>(u)] = v;
        used[static_cast<size_t>(v)] = true;
        if (extend_iso(a, b, map, used, u + 1)) return true;
        used[static_cast<size_t>(v)] = false;
    }
    return false;
}

}  // namespace

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(static_cast<size_t>(a.order()), -1);
    std::vector<bool> used(static_cast<size_t>(a.order()), false);
    return extend_iso(a, b, map, used, 0);
}

bool has_four_cycle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int common = 0;
            for (int w = 0; w < g.order(); ++w)
                if (w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v)) ++common;
            if (common >= 2) return true;
        }
    return false;
}

}  // namespace cns
