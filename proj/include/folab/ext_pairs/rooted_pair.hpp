#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"

namespace folab {

// A pair (G, H): G is `big`, H has vertex set `roots` (in this order) and edge set
// `small_edges`, which may omit edges of G between roots.
class RootedPair {
 public:
  RootedPair(Graph big, VertexTuple roots, std::vector<Edge> small_edges);

  const Graph& big() const noexcept { return big_; }
  const VertexTuple& roots() const noexcept { return roots_; }
  const std::vector<Edge>& small_edges() const noexcept { return small_edges_; }
  // V(G) \ V(H), ascending.
  const std::vector<Vertex>& new_vertices() const noexcept { return new_vertices_; }

  std::size_t root_count() const noexcept { return roots_.size(); }
  bool is_root(Vertex x) const noexcept { return root_index_[x] >= 0; }
  // Position of x in roots, or -1.
  int root_index(Vertex x) const noexcept { return root_index_[x]; }
  bool is_small_edge(Vertex a, Vertex b) const;
  // Edges of G between roots that are not edges of H.
  std::vector<Edge> extra_root_edges() const;

 private:
  Graph big_;
  VertexTuple roots_;
  std::vector<Edge> small_edges_;
  std::vector<Vertex> new_vertices_;
  std::vector<int> root_index_;
};

// H = G restricted to the roots, with all of G's edges among them.
RootedPair induced_pair(Graph big, VertexTuple roots);

// Graph file plus `small <v>`, `smalledge <u> <v>` and `root <v>` lines. Root lines
// fix the order of the small vertices; when absent the order is ascending.
RootedPair read_pair(std::istream& in);
RootedPair load_pair(const std::filesystem::path& path);
void write_pair(std::ostream& out, const RootedPair& pair);

class Alpha {
 public:
  // DomainError unless 0 < value < 1.
  explicit Alpha(Rational value);
  const Rational& value() const noexcept { return value_; }

  // 1 - 1/(2^(k-1) + a/b) for k > 3, a/b irreducible, a in [max(1, 2^(k-1) - b), 2^(k-1)].
  static Alpha from_game_parameters(int k, std::int64_t a, std::int64_t b);

 private:
  Rational value_;
};

}  // namespace folab
