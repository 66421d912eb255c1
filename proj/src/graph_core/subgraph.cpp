#include "folab/graph_core/subgraph.hpp"

#include <algorithm>
#include <string>

#include "folab/graph_core/errors.hpp"

namespace folab {

bool Subgraph::contains(Vertex x) const {
  return std::binary_search(vertices.begin(), vertices.end(), x);
}

bool Subgraph::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Subgraph make_subgraph(const Graph& host, std::vector<Vertex> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex x : vertices) require_vertex(host, x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Subgraph out{std::move(vertices), std::move(edges)};
  for (const Edge& e : out.edges) {
    if (e.u == e.v || !out.contains(e.u) || !out.contains(e.v) || !host.adjacent(e.u, e.v)) {
      throw DomainError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " is not a host edge on the subgraph's vertices");
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& host, std::span<const Vertex> vertices) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  for (Vertex x : vs) require_vertex(host, x);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (host.adjacent(vs[i], vs[j])) edges.emplace_back(vs[i], vs[j]);
  return {std::move(vs), std::move(edges)};
}

Subgraph whole_graph(const Graph& host) {
  std::vector<Vertex> vs(host.vertex_count());
  for (Vertex x = 0; x < vs.size(); ++x) vs[x] = x;
  return {std::move(vs), host.edges()};
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  Subgraph out;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                 std::back_inserter(out.vertices));
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                 std::back_inserter(out.edges));
  return out;
}

Graph as_graph(const Subgraph& s) {
  std::vector<Edge> edges;
  edges.reserve(s.edges.size());
  auto index = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(s.vertices.begin(), s.vertices.end(), x) -
                               s.vertices.begin());
  };
  for (const Edge& e : s.edges) edges.emplace_back(index(e.u), index(e.v));
  return Graph(s.vertices.size(), edges);
}

}  // namespace folab
