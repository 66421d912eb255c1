#pragma once

#include <cstddef>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/subgraph.hpp"

namespace folab {

enum class CyclicKind { Type1, Type2 };

// Type1: a path x1-y1-...-y_t1 off one anchor, then a cycle of t2 >= 2 further new
// vertices closing back on y_t1 (on x1 when t1 = 0), t1 + t2 <= m - 1.
// Type2: a path x1-y1-...-y_t-x2 between distinct anchors, 0 <= t <= m - 1; t = 0 is
// a single host edge absent from the base.
struct CyclicExtension {
  CyclicKind kind = CyclicKind::Type1;
  std::vector<Vertex> anchors;
  std::vector<Vertex> new_vertices;  // ascending
  std::vector<Edge> new_edges;       // ascending

  friend bool operator==(const CyclicExtension&, const CyclicExtension&) = default;
};

// All cyclic m-extensions of base inside host, deduplicated by (new vertices, new edges).
std::vector<CyclicExtension> enumerate_cyclic_extensions(const Graph& host, const Subgraph& base,
                                                         std::size_t m);

bool has_cyclic_extension(const Graph& host, const Subgraph& base, std::size_t m);
bool has_type2_extension(const Graph& host, const Subgraph& base, std::size_t m);

// base + extension as a subgraph of host.
Subgraph apply_extension(const Subgraph& base, const CyclicExtension& ext);

// Every cyclic m-extension of g_sub is also a cyclic m-extension of h_sub.
bool is_cyclically_m_maximal(const Graph& host, const Subgraph& g_sub, const Subgraph& h_sub,
                             std::size_t m);

}  // namespace folab
