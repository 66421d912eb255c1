#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "folab/ef_game/game.hpp"
#include "folab/fo_logic/formula.hpp"

namespace folab {

// `count` distinct closed sentences of quantifier depth 1..max_depth over adj and =.
std::vector<Formula> random_sentence_battery(std::size_t count, std::size_t max_depth,
                                             std::uint64_t seed);

// Pairs on 1..max_v vertices each. A third are relabelings of a G(v, 1/2) sample, a
// third differ from it in one vertex pair, the rest are independent samples.
std::vector<std::pair<Graph, Graph>> random_graph_pairs(std::size_t count, std::size_t max_v,
                                                        std::uint64_t seed);

struct CrosscheckViolation {
  enum class Kind {
    // Duplicator wins EHR(G,H,k) yet the sentence separates G and H.
    SeparatedDespiteDuplicatorWin,
    // The sentence of depth d separates G and H yet Duplicator wins EHR(G,H,d).
    SolverMissedSeparation,
  };
  Kind kind;
  Formula witness;
};

struct CrosscheckReport {
  Winner value = Winner::DuplicatorWins;  // solve(G, H, k)
  std::size_t separating = 0;             // battery sentences that separate G and H
  std::vector<CrosscheckViolation> violations;
  bool clean() const noexcept { return violations.empty(); }
};

// DomainError for a battery sentence that is open or deeper than k.
CrosscheckReport crosscheck_ehrenfeucht(const Graph& g, const Graph& h, std::size_t k,
                                        std::span<const Formula> battery);

}  // namespace folab
