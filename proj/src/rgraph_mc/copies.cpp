#include "folab/rgraph_mc/copies.hpp"

#include <string>
#include <vector>

#include "folab/ext_pairs/extensions.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/invariants.hpp"

namespace folab {

void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
  const RootedPair unrooted(pattern, {}, {});
  for_each_extension(host, unrooted, {}, {}, visit);
}

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern) {
  std::uint64_t count = 0;
  for_each_embedding(host, pattern, [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t count_copies(const Graph& host, const Graph& pattern, std::size_t cap) {
  if (pattern.vertex_count() > cap) {
    throw CapacityError("count_copies: pattern has " + std::to_string(pattern.vertex_count()) +
                        " vertices, cap is " + std::to_string(cap));
  }
  if (pattern.vertex_count() > host.vertex_count()) return 0;
  return count_embeddings(host, pattern) / automorphism_count(pattern, cap);
}

bool contains_copy(const Graph& host, const Graph& pattern) {
  bool found = false;
  for_each_embedding(host, pattern, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace folab
