#pragma once

#include "cnspectra/graph.hpp"

namespace cns {

/// Exact planarity test (Demoucron-style face addition per biconnected
/// component). Works for any order; built for desk scale, not asymptotics.
bool is_planar(const Graph& g);

}  // namespace cns
