#pragma once

#include <cstdint>
#include <string>

#include "cnspectra/graph.hpp"

namespace cns {

/// Canonical form of a graph: the graph6 encoding of a canonical relabelling.
/// Two graphs have equal certificates iff they are isomorphic.
struct Certificate {
    std::string g6;

    bool operator==(const Certificate&) const = default;
    auto operator<=>(const Certificate&) const = default;
};

/// Implementation ceiling for canonical forms.
inline constexpr int kCertificateMaxOrder = 64;

/// Throws CapabilityError above kCertificateMaxOrder.
Certificate certificate(const Graph& g);

/// The canonically relabelled graph itself.
Graph canonical_copy(const Graph& g);

namespace detail {
/// Hot-path variant: adjacency as single-word row masks, order <= 64.
std::string canonical_g6(int p, const uint64_t* rows);
}  // namespace detail

}  // namespace cns
