#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "folab/graph_core/graph.hpp"

namespace folab {

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

// Multi-source BFS; unreachable vertices get kInfiniteDistance.
std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const Vertex> sources);

std::size_t distance(const Graph& g, Vertex x, Vertex y);
std::size_t set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

// Vertices at distance exactly r from every entry of xs, ascending.
std::vector<Vertex> common_r_neighbors(const Graph& g, std::span<const Vertex> xs, std::size_t r);

struct InducedGraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> original vertex
};

// Vertices relabeled 0..|S|-1 in ascending original order.
InducedGraph induced(const Graph& g, std::span<const Vertex> vertices);

}  // namespace folab
