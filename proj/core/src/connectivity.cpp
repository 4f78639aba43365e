#include "cnspectra/connectivity.hpp"

#include <vector>

#include "cnspectra/errors.hpp"

namespace cns {

namespace {

// Connectivity of g minus the `removed` vertex set.
bool connected_without(const Graph& g, const Bitset& removed) {
    const int p = g.order();
    int start = -1;
    for (int v = 0; v < p; ++v)
        if (!removed.test(v)) {
            start = v;
            break;
        }
    if (start < 0) return true;
    Bitset seen(p);
    seen.set(start);
    std::vector<int> queue{start};
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        g.neighbours(v).for_each([&](int w) {
            if (!removed.test(w) && !seen.test(w)) {
                seen.set(w);
                ++reached;
                queue.push_back(w);
            }
        });
    }
    return reached == p - removed.count();
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return connected_without(g, Bitset(g.order()));
}

ConnectivityClass connectivity_class(const Graph& g) {
    const int p = g.order();
    if (p < 1) throw InputError("connectivity_class: empty graph");
    if (!is_connected(g)) return ConnectivityClass::Disconnected;

    for (int k = 1; k <= 2; ++k) {
        if (p - k < 2) break;  // removal cannot disconnect fewer than 2 leftovers
        if (k == 1) {
            for (int v = 0; v < p; ++v) {
                Bitset r(p);
                r.set(v);
                if (!connected_without(g, r)) return ConnectivityClass::One;
            }
        } else {
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v) {
                    Bitset r(p);
                    r.set(u);
                    r.set(v);
                    if (!connected_without(g, r)) return ConnectivityClass::Two;
                }
        }
    }
    // No small cut: conventional kappa = p - 1 for complete-like leftovers.
    int kappa = p - 1 < 3 ? p - 1 : 3;
    switch (kappa) {
        case 0: return ConnectivityClass::Disconnected;
        case 1: return ConnectivityClass::One;
        case 2: return ConnectivityClass::Two;
        default: return ConnectivityClass::ThreePlus;
    }
}

std::vector<Graph> connected_components(const Graph& g) {
    const int p = g.order();
    std::vector<Graph> out;
    Bitset assigned(p);
    for (int s = 0; s < p; ++s) {
        if (assigned.test(s)) continue;
        std::vector<int> verts{s};
        assigned.set(s);
        for (size_t head = 0; head < verts.size(); ++head)
            g.neighbours(verts[head]).for_each([&](int w) {
                if (!assigned.test(w)) {
                    assigned.set(w);
                    verts.push_back(w);
                }
            });
        out.push_back(g.induced(verts));
    }
    return out;
}

const char* to_string(ConnectivityClass c) {
    switch (c) {
        case ConnectivityClass::Disconnected: return "disconnected";
        case ConnectivityClass::One: return "1";
        case ConnectivityClass::Two: return "2";
        default: return "3+";
    }
}

}  // namespace cns
