#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"

namespace folab {

inline constexpr std::size_t kSubsetEnumerationCap = 16;
inline constexpr std::size_t kAutomorphismCap = 10;

// e(G)/v(G); DomainError on the empty graph.
Rational density(const Graph& g);

struct DensestSubset {
  Rational density;
  std::vector<Vertex> vertices;  // ascending
};

// Max density over nonempty induced subgraphs. Ties go to the lexicographically
// smallest sorted vertex list.
DensestSubset max_density(const Graph& g, std::size_t cap = kSubsetEnumerationCap);

// Every proper nonempty induced subgraph has strictly smaller density.
bool is_strictly_balanced(const Graph& g, std::size_t cap = kSubsetEnumerationCap);

// Same answer as is_strictly_balanced without a vertex cap; see balance_flow.hpp.
bool is_strictly_balanced_uncapped(const Graph& g);

std::uint64_t automorphism_count(const Graph& g, std::size_t cap = kAutomorphismCap);

// All bitmask subsets of vertices 0..n-1 paired with their induced edge counts.
// Requires n <= 24.
std::vector<std::uint16_t> induced_edge_counts(const Graph& g);

}  // namespace folab
