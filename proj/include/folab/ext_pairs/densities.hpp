#pragma once

#include <cstddef>
#include <vector>

#include "folab/ext_pairs/rooted_pair.hpp"

namespace folab {

inline constexpr std::size_t kPairEnumerationCap = 14;

struct RelCounts {
  std::size_t vertices = 0;  // v(G) - v(H)
  std::size_t edges = 0;     // e(G) - e(H)
};

RelCounts rel_counts(const RootedPair& pair);

// e(G,H)/v(G,H); DomainError when v(G,H) = 0.
Rational rel_density(const RootedPair& pair);

struct DensestExtension {
  Rational density;
  std::vector<Vertex> vertices;  // V(K), ascending, roots included
};

// Max of rho(K,H) over H ⊂ K ⊆ G with at least one new vertex, K induced on its
// vertex set. Ties go to the lexicographically smallest vertex list.
DensestExtension max_rel_density(const RootedPair& pair, std::size_t cap = kPairEnumerationCap);

// Least e(K,H) over maximizers K of rho(K,H) having an edge outside E(H) that is
// not between two new vertices. DomainError when no maximizer qualifies.
std::size_t e_min(const RootedPair& pair, std::size_t cap = kPairEnumerationCap);

// v(G,H) - alpha * e(G,H).
Rational f_alpha(const RootedPair& pair, const Alpha& alpha);

// f_alpha(S,H) > 0 for every H ⊂ S ⊆ G.
bool is_alpha_safe(const RootedPair& pair, const Alpha& alpha,
                   std::size_t cap = kPairEnumerationCap);

// rho(K,H) < rho(G,H) for every intermediate K with 0 < v(K,H) < v(G,H).
bool is_strictly_balanced_pair(const RootedPair& pair, std::size_t cap = kPairEnumerationCap);

// Same predicate with no vertex cap, via min cut.
bool is_strictly_balanced_pair_uncapped(const RootedPair& pair);

}  // namespace folab
