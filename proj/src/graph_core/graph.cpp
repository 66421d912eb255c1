#include "folab/graph_core/graph.hpp"

#include <algorithm>
#include <string>

#include "folab/graph_core/errors.hpp"

namespace folab {

Graph::Graph(std::size_t vertex_count) : Graph(vertex_count, std::span<const Edge>{}) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : n_(vertex_count), edges_(edges.begin(), edges.end()), adj_(vertex_count * vertex_count, 0),
      nbrs_(vertex_count) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) throw DomainError("edge endpoint " + std::to_string(e.v) + " out of range");
    if (adj_[e.u * n_ + e.v]) {
      throw DomainError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
    nbrs_[e.u].push_back(e.v);
    nbrs_[e.v].push_back(e.u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

void require_vertex(const Graph& g, Vertex x) {
  if (x >= g.vertex_count()) {
    throw DomainError("vertex " + std::to_string(x) + " out of range for graph on " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
}

void require_tuple(const Graph& g, std::span<const Vertex> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    require_vertex(g, tuple[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (tuple[i] == tuple[j]) throw DomainError("repeated vertex " + std::to_string(tuple[i]));
    }
  }
}

Graph complete_graph(std::size_t t) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < t; ++a)
    for (Vertex b = a + 1; b < t; ++b) edges.emplace_back(a, b);
  return Graph(t, edges);
}

Graph cycle_graph(std::size_t t) {
  if (t < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < t; ++a) edges.emplace_back(a, static_cast<Vertex>((a + 1) % t));
  return Graph(t, edges);
}

Graph path_graph(std::size_t t) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < t; ++a) edges.emplace_back(a, a + 1);
  return Graph(t, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= leaves; ++a) edges.emplace_back(0, a);
  return Graph(leaves + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw DomainError("permutation size mismatch");
  require_tuple(g, perm);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), edges);
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.vertex_count(), edges);
}

}  // namespace folab
