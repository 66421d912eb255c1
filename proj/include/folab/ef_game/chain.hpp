#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"
#include "folab/graph_core/subgraph.hpp"

namespace folab {

// G_0 = ({x}, ∅) ⊂ G_1 ⊂ ... ⊂ G_s, each a cyclic 2^(k-1)-extension of the previous
// one, ending when G_s has no such extension in the host.
struct ExtensionChain {
  std::vector<Subgraph> graphs;       // graphs[0] = G_0
  std::vector<std::size_t> step_edges;  // e_i = e(G_i) - e(G_(i-1)), i = 1..s
  // Steps whose new part is not a cyclic (2^(k-1) - 1)-extension, by index i.
  std::vector<std::size_t> long_steps;
  // Least mu with a long step G_mu -> G_(mu+1) such that the host without that step's
  // new part has no cyclic 2^(k-1)-extension of G_mu.
  std::optional<std::size_t> mu;
  bool rebuilt = false;          // the repair around the first long step was applied
  bool steps_valid = true;       // every step re-verified as a cyclic extension
  bool guard_exceeded = false;   // s passed 2^(k-1) b + 1 and the build stopped
  bool induced_closure = false;  // host restricted to V(G_s) equals G_s
  Rational closure_density;      // rho(host restricted to V(G_s)); 0 for an empty chain

  std::size_t length() const noexcept { return graphs.empty() ? 0 : graphs.size() - 1; }
  // Every long step is covered by mu (vacuous without long steps).
  bool property_d() const noexcept { return long_steps.empty() || mu.has_value(); }
};

// Greedy chain from x, shortest extension first. At the first long step the chain is
// rebuilt off the host with that step removed and the removed step re-appended, so
// that the step preceding it admits no other extension. DomainError for k < 2.
ExtensionChain build_extension_chain(const Graph& host, Vertex x, std::size_t k, std::size_t b);

}  // namespace folab
