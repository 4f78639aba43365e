#include "cnspectra/recognition.hpp"

#include <algorithm>

#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"

namespace cns {

bool is_outerplanar(const Graph& g) {
    Graph apex(g.order() + 1);
    for (auto [u, v] : g.edges()) apex.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v) apex.add_edge(g.order(), v);
    return is_planar(apex);
}

bool is_polyhedron(const Graph& g) {
    return g.order() >= 4 && is_planar(g) &&
           connectivity_class(g) == ConnectivityClass::ThreePlus;
}

namespace {

// Is the graph a disjoint union of paths, every component on >= 2 vertices?
bool is_linear_forest_no_short(const Graph& h) {
    const int p = h.order();
    for (int v = 0; v < p; ++v)
        if (h.degree(v) == 0 || h.degree(v) > 2) return false;
    // Degrees in {1,2}: acyclic iff every component has a degree-1 vertex.
    Bitset seen(p);
    for (int s = 0; s < p; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> queue{s};
        seen.set(s);
        int verts = 0, degsum = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++verts;
            degsum += h.degree(v);
            h.neighbours(v).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    queue.push_back(w);
                }
            });
        }
        if (degsum != 2 * (verts - 1)) return false;  // a cycle component
    }
    return true;
}

std::vector<int> others(int p, std::initializer_list<int> minus) {
    std::vector<int> out;
    for (int v = 0; v < p; ++v)
        if (std::find(minus.begin(), minus.end(), v) == minus.end()) out.push_back(v);
    return out;
}

}  // namespace

std::optional<TRecognition> recognize_T(const Graph& g) {
    const int p = g.order();
    if (p < 4) return std::nullopt;
    for (auto [x, y] : g.edges()) {
        if (g.degree(x) != p - 1 || g.degree(y) != p - 1) continue;
        Graph h = g.induced(others(p, {x, y}));
        if (!is_linear_forest_no_short(h)) continue;
        TRecognition rec;
        rec.m = p - 2;
        rec.full_path = is_connected(h);
        rec.perfect_matching = true;
        for (int v = 0; v < h.order(); ++v)
            if (h.degree(v) != 1) rec.perfect_matching = false;
        return rec;
    }
    return std::nullopt;
}

std::optional<int> recognize_Q(const Graph& g) {
    const int delta = g.max_degree();
    if (delta < 3 || !is_planar(g)) return std::nullopt;
    for (int m = 3; m <= delta; ++m) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            if (g.degree(v) < m) continue;
            bool twin = false;
            for (int w = 0; w < g.order() && !twin; ++w)
                if (w != v && g.neighbours(w) == g.neighbours(v)) twin = true;
            ok = twin;
        }
        if (ok) return m;
    }
    return std::nullopt;
}

std::optional<int> recognize_R(const Graph& g) {
    const int p = g.order();
    if (p < 4) return std::nullopt;
    for (int v = 0; v < p; ++v) {
        if (g.degree(v) != p - 1) continue;
        Graph h = g.induced(others(p, {v}));
        if (is_linear_forest_no_short(h)) return p - 1;
    }
    return std::nullopt;
}

namespace {

bool is_path(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1 && g.max_degree() <= 2;
}

bool is_cycle(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::optional<int> recognize_D(const Graph& g) {
    const int p = g.order();
    if (p < 3 || p % 2 == 0 || g.size() != 3 * (p - 1) / 2) return std::nullopt;
    for (int c = 0; c < p; ++c) {
        if (g.degree(c) != p - 1) continue;
        Graph h = g.induced(others(p, {c}));
        bool matching = true;
        for (int v = 0; v < h.order(); ++v)
            if (h.degree(v) != 1) matching = false;
        if (matching) return (p - 1) / 2;
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> recognize_biapex(const Graph& g) {
    // Two non-adjacent vertices x,y with N(x) = N(y) = everything else.
    const int p = g.order();
    for (int x = 0; x < p; ++x) {
        if (g.degree(x) != p - 2) continue;
        for (int y = x + 1; y < p; ++y) {
            if (g.degree(y) != p - 2 || g.adjacent(x, y)) continue;
            if (g.neighbours(x) == g.neighbours(y)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace

FamilyLabel recognize_family(const Graph& g) {
    const int p = g.order();
    using Kind = FamilyLabel::Kind;

    if (p == 8 || p == 12) {
        Certificate c = certificate(g);
        if (p == 8 && c == certificate(cube_graph())) return {Kind::Cube, 0};
        if (p == 12 && c == certificate(icosahedron_graph())) return {Kind::Icosahedron, 0};
    }
    if (p >= 4 && p <= 12) {
        Certificate c = certificate(g);
        for (int k = 3; k <= 9; ++k)
            if (c.g6 == s_graph_g6(k)) return {Kind::S, k};
        if (p == 6 && c == certificate(s_prime_graph())) return {Kind::Sprime, 0};
    }

    if (auto t = recognize_T(g)) {
        if (t->full_path) return {Kind::T, t->m};
        if (t->perfect_matching) return {Kind::Tprime, t->m};
        return {Kind::Tclass, t->m};
    }
    if (auto xy = recognize_biapex(g)) {
        Graph rim = g.induced(others(p, {xy->first, xy->second}));
        if (is_cycle(rim)) return {Kind::B, p - 2};
        if (rim.order() >= 2 && is_path(rim)) return {Kind::Bprime, p - 2};
        if (rim.order() >= 3 && rim.size() == 0) return {Kind::K2l, p - 2};
    }
    if (auto d = recognize_D(g)) return {Kind::D, *d};
    if (is_cycle(g)) return {Kind::Cycle, p};
    if (is_path(g)) return {Kind::Path, p};
    if (auto r = recognize_R(g)) return {Kind::Rclass, *r};
    if (auto q = recognize_Q(g)) return {Kind::Q, *q};
    return {Kind::None, 0};
}

std::string to_string(const FamilyLabel& label) {
    using Kind = FamilyLabel::Kind;
    switch (label.kind) {
        case Kind::T: return "T_" + std::to_string(label.param);
        case Kind::Tprime: return "T'_" + std::to_string(label.param);
        case Kind::Tclass: return "Tclass_" + std::to_string(label.param);
        case Kind::Q: return "Q_" + std::to_string(label.param);
        case Kind::B: return "B_" + std::to_string(label.param);
        case Kind::Bprime: return "B'_" + std::to_string(label.param);
        case Kind::D: return "D_" + std::to_string(label.param);
        case Kind::Rclass: return "Rclass_" + std::to_string(label.param);
        case Kind::K2l: return "K_{2," + std::to_string(label.param) + "}";
        case Kind::S: return "S_" + std::to_string(label.param);
        case Kind::Sprime: return "S'";
        case Kind::Cube: return "cube";
        case Kind::Icosahedron: return "icosahedron";
        case Kind::Cycle: return "C_" + std::to_string(label.param);
        case Kind::Path: return "P_" + std::to_string(label.param);
        case Kind::None: return "none";
    }
    return "none";
}

}  // namespace cns
