#pragma once

#include <cstddef>
#include <span>

#include "folab/graph_core/graph.hpp"

namespace folab {

// Strict balance of the pair (G, H) where V(H) = fixed and e(H) = fixed_edge_count:
// for every S with 0 < |S| < |F|, F = V(G) \ fixed,
//   e(G[fixed + S]) - e(H)  <  |S| * (e(G) - e(H)) / |F|.
// Each (forced-in, forced-out) vertex pair is one max-closure problem solved by
// min cut, so the cost is |F|^2 flows instead of 2^|F| subsets.
bool strictly_balanced_by_flow(const Graph& g, std::span<const Vertex> fixed,
                               std::size_t fixed_edge_count);

}  // namespace folab
