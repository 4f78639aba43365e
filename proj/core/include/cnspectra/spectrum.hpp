#pragma once

#include <set>
#include <string>
#include <vector>

#include "cnspectra/graph.hpp"

namespace cns {

/// A_n(G): the set of common-neighbourhood sizes over all n-subsets of vertices.
/// (The defining quantity is symmetric in the tuple, so unordered subsets suffice.)
struct Spectrum {
    int n = 0;
    std::set<int> values;

    bool operator==(const Spectrum&) const = default;
};

/// The sequence A_1(G), A_2(G), ..., A_p(G). A_n = {} for n > p is implicit.
struct Profile {
    int order = 0;
    std::vector<Spectrum> by_n;  // by_n[i] holds A_{i+1}

    const std::set<int>& at(int n) const;  // empty set for n > order
    bool operator==(const Profile&) const = default;
};

/// Exact A_n(G). Empty iff p < n. Throws InputError for n < 1.
Spectrum a_set(const Graph& g, int n);

/// All of A_1..A_p.
Profile profile(const Graph& g);

/// L(G): the largest l such that G contains K_{2,l}, i.e. the maximum
/// common-neighbourhood size over vertex pairs. 0 when p < 2 or no pair
/// has a common neighbour.
int l_value(const Graph& g);

std::string to_string(const std::set<int>& values);

}  // namespace cns
