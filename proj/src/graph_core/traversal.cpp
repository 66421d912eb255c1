#include "folab/graph_core/traversal.hpp"

#include <algorithm>
#include <deque>

#include "folab/graph_core/errors.hpp"

namespace folab {

std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<std::size_t> dist(g.vertex_count(), kInfiniteDistance);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    require_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kInfiniteDistance) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, y);
  const Vertex src[] = {x};
  return bfs_distances(g, src)[y];
}

std::size_t set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw DomainError("set_distance needs nonempty sets");
  for (Vertex y : b) require_vertex(g, y);
  const auto dist = bfs_distances(g, a);
  std::size_t best = kInfiniteDistance;
  for (Vertex y : b) best = std::min(best, dist[y]);
  return best;
}

std::vector<Vertex> common_r_neighbors(const Graph& g, std::span<const Vertex> xs, std::size_t r) {
  if (xs.empty()) throw DomainError("common_r_neighbors needs a nonempty tuple");
  std::vector<std::uint8_t> ok(g.vertex_count(), 1);
  for (Vertex x : xs) {
    const Vertex src[] = {x};
    const auto dist = bfs_distances(g, src);
    for (Vertex y = 0; y < g.vertex_count(); ++y) ok[y] &= dist[y] == r;
  }
  std::vector<Vertex> out;
  for (Vertex y = 0; y < g.vertex_count(); ++y)
    if (ok[y]) out.push_back(y);
  return out;
}

InducedGraph induced(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> original(vertices.begin(), vertices.end());
  for (Vertex x : original) require_vertex(g, x);
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < original.size(); ++i)
    for (Vertex j = i + 1; j < original.size(); ++j)
      if (g.adjacent(original[i], original[j])) edges.emplace_back(i, j);
  return {Graph(original.size(), edges), std::move(original)};
}

}  // namespace folab
