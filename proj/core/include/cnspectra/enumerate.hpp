#pragma once

#include <functional>
#include <vector>

#include "cnspectra/graph.hpp"

namespace cns {

/// Conjunctive predicate set for enumerate_graphs.
struct GraphFilter {
    bool connected = false;
    bool planar = false;
    bool outerplanar = false;
    bool polyhedral = false;
    bool triangulation = false;  // maximal planar: q = 3p - 6, p >= 3
};

/// Streams exactly one representative per isomorphism class of order p
/// satisfying the filter, in a deterministic order. Built-in generation is
/// supported for 1 <= p <= 9 (extend-by-one-vertex with a canonical-form
/// acceptance test); hereditary predicates prune intermediate levels.
void enumerate_graphs(int p, const GraphFilter& filter, const std::function<void(const Graph&)>& sink);

std::vector<Graph> enumerate_graphs(int p, const GraphFilter& filter);

bool filter_accepts(const GraphFilter& filter, const Graph& g);

}  // namespace cns
