#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace folab {

using Vertex = std::uint32_t;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Ordered list of distinct vertices of some host graph.
using VertexTuple = std::vector<Vertex>;

// Immutable finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  // Throws DomainError on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex a, Vertex b) const noexcept { return adj_[a * n_ + b] != 0; }
  const std::vector<Vertex>& neighbors(Vertex x) const noexcept { return nbrs_[x]; }
  std::size_t degree(Vertex x) const noexcept { return nbrs_[x].size(); }
  bool contains_vertex(Vertex x) const noexcept { return x < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

// Throws DomainError unless x < v(g).
void require_vertex(const Graph& g, Vertex x);
// Throws DomainError unless the entries are distinct vertices of g.
void require_tuple(const Graph& g, std::span<const Vertex> tuple);

Graph complete_graph(std::size_t t);
Graph cycle_graph(std::size_t t);
Graph path_graph(std::size_t t);
Graph star_graph(std::size_t leaves);
Graph disjoint_union(const Graph& a, const Graph& b);
// Vertex x of g becomes perm[x].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Graph with_edges(const Graph& g, std::span<const Edge> extra);

}  // namespace folab
