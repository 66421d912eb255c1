#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folab/ext_pairs/rooted_pair.hpp"

namespace folab {

// Desk-scale stand-ins for the size bounds of the three properties.
struct MembershipCaps {
  std::size_t max_subgraph_v = 4;  // property 1 subgraphs, property 3 graphs H
  std::size_t max_pattern_v = 3;   // v(H_1) in property 2 and v(K_1) everywhere
  std::size_t max_root_v = 2;      // v(H_2) in property 2
};

// Caps beyond these raise CapacityError.
inline constexpr MembershipCaps kMembershipCapLimits{7, 4, 3};

struct MembershipFailure {
  int property = 0;  // 1, 2 or 3
  std::string witness;
};

struct MembershipReport {
  std::vector<MembershipFailure> failures;
  std::size_t safe_patterns = 0;   // property 2 patterns checked
  std::size_t constraints = 0;     // maximality constraints (K_1, K_2)
  std::size_t sparse_graphs = 0;   // property 3 graphs checked

  bool member() const noexcept { return failures.empty(); }
  bool passes(int property) const noexcept;
};

// Patterns are enumerated up to isomorphism fixing the root set; root-root edges are
// left out since strict extensions never require them.
MembershipReport check_S_membership(const Graph& gamma, const Alpha& alpha,
                                    const MembershipCaps& caps = {});

// Constraint family used by properties 2 and 3: v(K_1) <= max_pattern_v,
// v(K_2) <= 2, at least one new vertex, f_alpha(K_1, K_2) < 0.
std::vector<RootedPair> negative_constraints(const Alpha& alpha, std::size_t max_pattern_v);

// Connected strictly balanced graphs on at most max_v vertices with density < 1/alpha,
// one per isomorphism class.
std::vector<Graph> sparse_balanced_graphs(const Alpha& alpha, std::size_t max_v);

}  // namespace folab
