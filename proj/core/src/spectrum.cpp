#include "cnspectra/spectrum.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>

#include "cnspectra/errors.hpp"

namespace cns {

namespace {

const std::set<int> kEmptySet;

// C(n,k) clamped at 2^62 so comparisons stay in int64 territory.
uint64_t comb_capped(int n, int k) {
    constexpr uint64_t cap = uint64_t{1} << 62;
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > cap / static_cast<uint64_t>(n - k + i)) return cap;
        r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
        if (r >= cap) return cap;
    }
    return r;
}

// Enumerates n-subsets of `pool` and applies f to each (as index vector into g).
template <class F>
void for_subsets(const std::vector<int>& pool, int n, F f) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::vector<int> pick(static_cast<size_t>(n));
    int k = static_cast<int>(pool.size());
    if (n > k) return;
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < n; ++i) pick[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        f(pick);
        int i = n - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == k - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace

const std::set<int>& Profile::at(int n) const {
    if (n < 1 || n > order) return kEmptySet;
    return by_n[static_cast<size_t>(n - 1)].values;
}

Spectrum a_set(const Graph& g, int n) {
    if (n < 1) throw InputError("a_set: n must be positive");
    const int p = g.order();
    Spectrum s;
    s.n = n;
    if (p < n) return s;

    if (n == 1) {
        s.values = g.degree_set();
        return s;
    }

    std::vector<int> all(static_cast<size_t>(p));
    for (int v = 0; v < p; ++v) all[static_cast<size_t>(v)] = v;

    if (n == 2) {
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v) {
                Bitset acc = g.neighbours(u);
                acc &= g.neighbours(v);
                s.values.insert(acc.count());
            }
        return s;
    }

    // A common neighbour of an n-subset has degree >= n, so for n > Delta
    // every subset is empty-neighbourhood.
    if (n > g.max_degree()) {
        s.values.insert(0);
        return s;
    }

    const uint64_t total = comb_capped(p, n);
    if (total <= 200000) {
        for_subsets(all, n, [&](const std::vector<int>& pick) {
            Bitset acc = g.neighbours(pick[0]);
            for (size_t i = 1; i < pick.size(); ++i) acc &= g.neighbours(pick[i]);
            s.values.insert(acc.count());
        });
        return s;
    }

    // Large graphs: any subset with a non-empty common neighbourhood lies inside
    // some closed neighbourhood, so walk n-subsets of N(v) per vertex and settle
    // membership of 0 by counting covered subsets.
    uint64_t cover_bound = 0;
    for (int v = 0; v < p; ++v) cover_bound += comb_capped(g.degree(v), n);
    bool zero = false;
    if (cover_bound < total) {
        zero = true;
        for (int v = 0; v < p; ++v) {
            std::vector<int> nb = g.neighbour_list(v);
            for_subsets(nb, n, [&](const std::vector<int>& pick) {
                Bitset acc = g.neighbours(pick[0]);
                for (size_t i = 1; i < pick.size(); ++i) acc &= g.neighbours(pick[i]);
                s.values.insert(acc.count());
            });
        }
    } else {
        if (p > 64) throw CapabilityError("a_set: dense graph above 64 vertices");
        std::unordered_set<uint64_t> covered;
        for (int v = 0; v < p; ++v) {
            std::vector<int> nb = g.neighbour_list(v);
            for_subsets(nb, n, [&](const std::vector<int>& pick) {
                uint64_t key = 0;
                for (int x : pick) key |= uint64_t{1} << x;
                if (!covered.insert(key).second) return;
                Bitset acc = g.neighbours(pick[0]);
                for (size_t i = 1; i < pick.size(); ++i) acc &= g.neighbours(pick[i]);
                s.values.insert(acc.count());
            });
        }
        zero = covered.size() < total;
    }
    if (zero) s.values.insert(0);
    return s;
}

Profile profile(const Graph& g) {
    Profile pr;
    pr.order = g.order();
    pr.by_n.reserve(static_cast<size_t>(g.order()));
    for (int n = 1; n <= g.order(); ++n) pr.by_n.push_back(a_set(g, n));
    return pr;
}

int l_value(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Bitset acc = g.neighbours(u);
            acc &= g.neighbours(v);
            best = std::max(best, acc.count());
        }
    return best;
}

std::string to_string(const std::set<int>& values) {
    std::string out = "{";
    bool first = true;
    for (int v : values) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(v);
    }
    out += "}";
    return out;
}

}  // namespace cns
