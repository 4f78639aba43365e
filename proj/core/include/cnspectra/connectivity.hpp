#pragma once

#include "cnspectra/graph.hpp"

namespace cns {

bool is_connected(const Graph& g);  // true for orders 0 and 1

/// Vertex connectivity bucketed at the only threshold the classification
/// needs. The bucket follows the conventional kappa: complete graphs K_p
/// report kappa = p-1, so K_1 (kappa = 0) lands in Disconnected even though
/// it is connected; use is_connected for reachability questions.
enum class ConnectivityClass { Disconnected, One, Two, ThreePlus };

ConnectivityClass connectivity_class(const Graph& g);  // requires p >= 1

std::vector<Graph> connected_components(const Graph& g);

const char* to_string(ConnectivityClass c);

}  // namespace cns
