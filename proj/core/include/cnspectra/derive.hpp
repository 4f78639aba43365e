#pragma once

#include <map>

#include "cnspectra/canonical.hpp"
#include "cnspectra/graph.hpp"

namespace cns {

/// Recovers S_3..S_9 from their defining properties by exhaustive search over
/// all graphs up to max_order:
///   S_5 / S_7: the unique triangulation on 7 / 8 vertices with 0 not in A_3
///              that is not of the form H + K_2;
///   S_3: the unique connected planar graph with A_2 = {2,3} besides T_3;
///   S_4: the unique polyhedron with A_2 = {0,2,3};
///   S_6, S_8, S_9: the three polyhedra with A_2 = {2,3,4} besides T_4, S_5,
///                  S_7, named in (order, size, certificate) order.
/// Throws CapabilityError with an instruction to raise max_order when a
/// uniqueness count is not met. Requires max_order >= 8.
std::map<int, Certificate> derive_s_graphs(int max_order);

}  // namespace cns
