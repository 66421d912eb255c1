#pragma once

#include <span>
#include <vector>

#include "folab/graph_core/graph.hpp"

namespace folab {

// Subgraph of a host graph in host coordinates; both lists kept sorted.
struct Subgraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool contains(Vertex x) const;
  bool contains(const Edge& e) const;
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

// Sorts and deduplicates; throws DomainError if an edge is missing from the host
// or has an endpoint outside the vertex list.
Subgraph make_subgraph(const Graph& host, std::vector<Vertex> vertices, std::vector<Edge> edges);
Subgraph induced_subgraph(const Graph& host, std::span<const Vertex> vertices);
Subgraph whole_graph(const Graph& host);
Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
// The subgraph as a standalone graph, vertices relabeled in ascending order.
Graph as_graph(const Subgraph& s);

}  // namespace folab
