#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "folab/graph_core/graph.hpp"

namespace folab {

inline constexpr std::size_t kCopyPatternCap = 8;

// Calls visit on each injective map V(pattern) -> V(host) carrying every pattern
// edge onto a host edge (image[x] for pattern vertex x). visit returns false to stop.
void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(std::span<const Vertex>)>& visit);

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern);

// Unlabeled, not necessarily induced copies: embeddings / automorphisms.
std::uint64_t count_copies(const Graph& host, const Graph& pattern, std::size_t cap = kCopyPatternCap);

bool contains_copy(const Graph& host, const Graph& pattern);

}  // namespace folab
