#pragma once

#include <string>
#include <string_view>

#include "cnspectra/graph.hpp"

namespace cns {

/// Parse one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are tolerated. Throws InputError (with the byte offset) on
/// malformed input: bad length, byte outside [63,126], or non-zero padding.
Graph parse_graph6(std::string_view line);

/// Standard graph6 encoding (no header, no newline). Bit-exact round trip:
/// parse_graph6(write_graph6(g)) is the identical labelled graph.
std::string write_graph6(const Graph& g);

/// Edge-list text form "p; u v; u v; ...".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Auto-detects graph6 vs edge-list input (edge lists start with a digit).
Graph parse_graph_auto(std::string_view text);

}  // namespace cns
