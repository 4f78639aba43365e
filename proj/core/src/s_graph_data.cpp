#include <array>
#include <string>

#include "cnspectra/errors.hpp"
#include "cnspectra/graph6.hpp"
#include "cnspectra/recognition.hpp"

namespace cns {

namespace {

// Canonical graph6 of S_3..S_9, recovered by derive_s_graphs(10) and
// committed here (regeneration is covered by tests; see also
// core/data/s_graphs.cert).
const std::array<std::string, 7> kSGraph = {
    "HB]lmZR",    // S_3: order 9 triangulation, A_2 = {2,3}
    "II\\skueiW",  // S_4: order 10 triangulation, A_2 = {0,2,3}
    "FBn^w",      // S_5: order 7 triangulation, 0 not in A_3
    "FJn^W",      // S_6: order 7, A_2 = {2,3,4}
    "G?]}~[",     // S_7: order 8 triangulation, 0 not in A_3
    "G@]u~[",     // S_8: order 8, A_2 = {2,3,4}
    "GK]}vK",     // S_9: order 8, A_2 = {2,3,4}
};

}  // namespace

const std::string& s_graph_g6(int k) {
    if (k < 3 || k > 9) throw InputError("s_graph: k must be in 3..9");
    return kSGraph[static_cast<size_t>(k - 3)];
}

Graph s_graph(int k) {
    const std::string& g6 = s_graph_g6(k);
    if (g6.empty()) throw CapabilityError("s_graph: data not derived yet");
    return parse_graph6(g6);
}

}  // namespace cns
