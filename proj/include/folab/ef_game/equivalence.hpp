#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folab/ef_game/game.hpp"

namespace folab {

inline constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

// Indexed by vertex of the source graph; kUnmapped off the certified part.
using PartialMap = std::vector<Vertex>;

// Vertex sets are read as induced subgraphs of their host.
using VertexSets = std::vector<std::vector<Vertex>>;

struct EquivalenceCertificate {
  enum class Kind { RegularKRL, KR };
  Kind kind = Kind::RegularKRL;
  std::size_t l = 1;
  VertexSets tuples_x;
  VertexSets tuples_y;
  PartialMap isomorphism;  // X vertex -> Y vertex
};

struct EquivalenceResult {
  bool holds = false;
  // "I".."V", "cyclic", "type2" or "unique" naming the first failed condition.
  std::string failed;
  std::optional<PartialMap> isomorphism;
  explicit operator bool() const noexcept { return holds; }
};

// Parameters shared by both notions; b scales the size bound of Property IV.
struct EquivalenceLevel {
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t b = 1;
};

// Picks are (x, y) pairs with x in X and y in Y. DomainError on malformed tuples or
// levels outside 1 <= l <= r <= k. A hint map is tried first for Property V.
EquivalenceResult regular_equivalence(const Graph& x, const Graph& y, const VertexSets& tuples_x,
                                      const VertexSets& tuples_y, std::span<const PickPair> picks,
                                      EquivalenceLevel level, std::size_t l,
                                      const PartialMap* hint = nullptr);

bool check_regular_equivalence(const Graph& x, const Graph& y, const VertexSets& tuples_x,
                               const VertexSets& tuples_y, std::span<const PickPair> picks,
                               std::size_t k, std::size_t r, std::size_t l, std::size_t b = 1);

// (k,r)-equivalence; requires r < k.
EquivalenceResult kr_equivalence(const Graph& x, const Graph& y, const std::vector<Vertex>& tilde_x,
                                 const std::vector<Vertex>& tilde_y,
                                 std::span<const PickPair> picks, EquivalenceLevel level,
                                 const PartialMap* hint = nullptr);

bool check_kr_equivalence(const Graph& x, const Graph& y, const std::vector<Vertex>& tilde_x,
                          const std::vector<Vertex>& tilde_y, std::span<const PickPair> picks,
                          std::size_t k, std::size_t r, std::size_t b = 1);

// Map from the union of tuples_x onto the union of tuples_y, tuple j onto tuple j,
// preserving adjacency inside each tuple and sending every pick x to its y.
std::optional<PartialMap> find_tuple_isomorphism(const Graph& x, const Graph& y,
                                                 const VertexSets& tuples_x,
                                                 const VertexSets& tuples_y,
                                                 std::span<const PickPair> picks,
                                                 const PartialMap* hint = nullptr);

// 2^(2k) b + 2^(k-1) r, saturating.
std::size_t certificate_size_bound(EquivalenceLevel level);

}  // namespace folab
