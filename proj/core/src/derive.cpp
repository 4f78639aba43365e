#include "cnspectra/derive.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

#include "cnspectra/brute.hpp"
#include "cnspectra/enumerate.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/graph6.hpp"
#include "cnspectra/recognition.hpp"

namespace cns {

namespace {

[[noreturn]] void shortfall(const std::string& what, size_t got, size_t want) {
    throw CapabilityError("derive_s_graphs: expected " + std::to_string(want) + " " + what +
                          ", found " + std::to_string(got) + "; increase max_order");
}

// Order-10 pass. The rows scanned here ({2,3}, {0,2,3}, {2,3,4}) have no
// members of connectivity <= 2 at this order: a cut vertex puts 1 into A_2,
// and a 2-cut forces the dominating-pair shapes whose A_2 is {2,l} or
// {2,3,l} with l >= 4, or contains 0 without 3-freedom. So scanning
// polyhedra suffices, and those arise as one-vertex extensions of planar
// order-9 graphs. Cheap bit-mask filters keep the pass fast.
void scan_order_10(std::vector<std::pair<std::set<int>, Certificate>>& hits) {
    GraphFilter pf;
    pf.planar = true;
    std::vector<std::array<uint64_t, 9>> parents;
    enumerate_graphs(9, pf, [&](const Graph& g) {
        std::array<uint64_t, 9> rows{};
        for (auto [u, v] : g.edges()) {
            rows[static_cast<size_t>(u)] |= uint64_t{1} << v;
            rows[static_cast<size_t>(v)] |= uint64_t{1} << u;
        }
        parents.push_back(rows);
    });

    std::set<std::string> seen;
    uint64_t rows[10];
    for (const auto& par : parents) {
        for (uint64_t mask = 0; mask < 512; ++mask) {
            if (std::popcount(mask) < 3) continue;  // polyhedra need degree >= 3
            for (int v = 0; v < 9; ++v)
                rows[v] = par[static_cast<size_t>(v)] | (((mask >> v) & 1ull) << 9);
            rows[9] = mask;
            int q = 0;
            bool ok = true;
            for (int v = 0; v < 10 && ok; ++v) {
                int d = std::popcount(rows[v]);
                if (d < 3) ok = false;
                q += d;
            }
            if (!ok || q / 2 > 24) continue;
            std::set<int> a2;
            for (int u = 0; u < 10 && ok; ++u)
                for (int v = u + 1; v < 10 && ok; ++v) {
                    int c = std::popcount(rows[u] & rows[v]);
                    if (c == 1 || c > 4) ok = false;
                    a2.insert(c);
                }
            if (!ok) continue;
            if (a2 != std::set<int>{2, 3} && a2 != std::set<int>{0, 2, 3} &&
                a2 != std::set<int>{2, 3, 4})
                continue;
            Graph g(10);
            for (int u = 0; u < 10; ++u)
                for (int v = u + 1; v < 10; ++v)
                    if ((rows[u] >> v) & 1) g.add_edge(u, v);
            if (!is_polyhedron(g)) continue;
            Certificate c = certificate(g);
            if (seen.insert(c.g6).second) hits.emplace_back(a2, c);
        }
    }
}

}  // namespace

std::map<int, Certificate> derive_s_graphs(int max_order) {
    if (max_order < 8) throw InputError("derive_s_graphs: max_order must be at least 8");
    if (max_order > 10)
        throw InputError("derive_s_graphs: built-in search stops at order 10");
    std::map<int, Certificate> out;

    // S_5, S_7: non-(H+K_2) triangulations with 0 not in A_3, orders 7 and 8.
    for (int p : {7, 8}) {
        std::vector<Certificate> found;
        GraphFilter f;
        f.triangulation = true;
        enumerate_graphs(p, f, [&](const Graph& g) {
            if (brute_a_set(g, 3).values.count(0)) return;
            if (recognize_T(g)) return;
            found.push_back(certificate(g));
        });
        if (found.size() != 1)
            shortfall("triangulations on " + std::to_string(p) + " vertices", found.size(), 1);
        out[p == 7 ? 5 : 7] = found[0];
    }

    const Certificate t3 = certificate(t_graph(3));
    const Certificate t4 = certificate(t_graph(4));
    std::vector<Certificate> s3hits, s4hits;
    std::vector<std::tuple<int, int, Certificate>> trio;

    auto consider = [&](const std::set<int>& a2, const Graph& g) {
        if (a2 == std::set<int>{2, 3}) {
            Certificate c = certificate(g);
            if (c != t3) s3hits.push_back(c);
        } else if (a2 == std::set<int>{0, 2, 3}) {
            if (connectivity_class(g) != ConnectivityClass::ThreePlus) return;  // K_{2,3}, S'
            s4hits.push_back(certificate(g));
        } else if (a2 == std::set<int>{2, 3, 4}) {
            Certificate c = certificate(g);
            if (c != t4 && c != out[5] && c != out[7])
                trio.emplace_back(g.order(), g.size(), c);
        }
    };

    for (int p = 4; p <= std::min(max_order, 9); ++p) {
        GraphFilter f;
        f.connected = true;
        f.planar = true;
        enumerate_graphs(p, f, [&](const Graph& g) { consider(brute_a_set(g, 2).values, g); });
    }
    if (max_order >= 10) {
        std::vector<std::pair<std::set<int>, Certificate>> hits;
        scan_order_10(hits);
        for (const auto& [a2, cert] : hits) consider(a2, parse_graph6(cert.g6));
    }

    if (s3hits.size() != 1) shortfall("graphs with A_2 = {2,3} besides T_3", s3hits.size(), 1);
    out[3] = s3hits[0];
    if (s4hits.size() != 1) shortfall("polyhedra with A_2 = {0,2,3}", s4hits.size(), 1);
    out[4] = s4hits[0];
    if (trio.size() != 3)
        shortfall("polyhedra with A_2 = {2,3,4} besides T_4, S_5, S_7", trio.size(), 3);
    std::sort(trio.begin(), trio.end());
    out[6] = std::get<2>(trio[0]);
    out[8] = std::get<2>(trio[1]);
    out[9] = std::get<2>(trio[2]);
    return out;
}

}  // namespace cns
