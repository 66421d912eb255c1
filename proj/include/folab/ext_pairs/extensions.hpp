#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "folab/ext_pairs/rooted_pair.hpp"

namespace folab {

// image[x] = host vertex for pattern vertex x.
using VertexMap = std::vector<Vertex>;

struct ExtensionQuery {
  bool strict = false;
  // Optional filter on the host images of new pattern vertices.
  std::function<bool(Vertex)> admissible;
};

// Calls visit on every injective map V(pattern) -> V(host) sending roots to anchor
// and edges of E(G) \ E(H) to host edges. Strict maps also send non-edges between a
// new vertex and any pattern vertex to host non-edges. visit returns false to stop.
// Returns false iff stopped early.
bool for_each_extension(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor,
                        const ExtensionQuery& query,
                        const std::function<bool(std::span<const Vertex>)>& visit);

std::vector<VertexMap> enumerate_extensions(const Graph& host, const RootedPair& pattern,
                                            std::span<const Vertex> anchor, bool strict);

bool has_extension(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor,
                   const ExtensionQuery& query = {});

// (K,T)-maximality of the host subgraph on gt (over ht, or the graph variant when
// ht is absent). k_pattern needs at least one new vertex; t_size must equal its
// root count.
bool is_kt_maximal(const Graph& host, std::span<const Vertex> gt,
                   std::optional<std::span<const Vertex>> ht, const RootedPair& k_pattern,
                   std::size_t t_size);

struct MaximalityConstraint {
  RootedPair pattern;
  std::size_t t_size = 0;
};

// Strict extensions of anchor whose image is (K,T)-maximal over the anchor for every
// constraint.
std::size_t count_kt_maximal_extensions(const Graph& host, const RootedPair& pattern,
                                        std::span<const Vertex> anchor,
                                        std::span<const MaximalityConstraint> constraints);

}  // namespace folab
