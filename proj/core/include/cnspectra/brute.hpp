#pragma once

#include "cnspectra/spectrum.hpp"

namespace cns {

// Second, deliberately naive implementations used as ground truth against the
// bit-set code paths. Nested loops over an adjacency matrix, no shortcuts.

Spectrum brute_a_set(const Graph& g, int n);
Profile brute_profile(const Graph& g);

/// Exhaustive permutation search (with degree pruning). Small orders only.
bool brute_isomorphic(const Graph& a, const Graph& b);

/// True iff g contains a (not necessarily induced) 4-cycle, i.e. some pair of
/// vertices has two or more common neighbours.
bool has_four_cycle(const Graph& g);

}  // namespace cns
