#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folab/ef_game/equivalence.hpp"
#include "folab/ef_game/game.hpp"
#include "folab/ef_game/solver.hpp"
#include "folab/ext_pairs/rooted_pair.hpp"

namespace folab {

// S1: first round. Sr: a (k,r)-certificate is held. S1r and NextRound: the script
// keeps an uncertified map after leaving Sr. Solver: the regular certificate was
// reached (or the script broke down) and the exact solver plays on. Mirror: G = H.
enum class StrategyPhase { S1, Sr, S1r, NextRound, Solver, Mirror };

const char* to_string(StrategyPhase phase);

struct StrategyContext {
  StrategyPhase phase = StrategyPhase::S1;
  VertexSets tilde_g;
  VertexSets tilde_h;
  PartialMap phi;  // G vertex -> H vertex on the tilde parts
  std::optional<EquivalenceCertificate::Kind> certified;
  std::size_t scripted_moves = 0;
  std::size_t solver_moves = 0;
  // Replies where no script candidate kept a win that the solver could still find.
  std::size_t script_gaps = 0;
  bool fallback = false;
  std::string fallback_reason;
};

struct StrategyOptions {
  Alpha alpha{Rational(15, 16)};
  std::size_t b = 1;
  bool mirror = false;  // requires G = H
};

// Duplicator following the case analysis of the first-round chain, the
// (k,r)-equivalence rounds and their successors. Each branch proposes candidate
// replies together with the tilde parts they induce; candidates are ranked by the
// certificate they validate and the solver picks the first that keeps a win. Branches
// ending in regular equivalence hand over to the solver.
class ScriptedDuplicator {
 public:
  // CapacityError when (v(G) v(H))^k exceeds the solver guard.
  ScriptedDuplicator(const Graph& g, const Graph& h, std::size_t k, StrategyOptions options = {});

  // Reply to the pending pick; nullopt when no legal vertex exists.
  std::optional<Vertex> reply(const GameState& state);

  const StrategyContext& context() const noexcept { return context_; }
  void reset();
  GameSolver& solver() noexcept { return solver_; }

 private:
  struct Candidate {
    Vertex y = 0;
    VertexSets tuples_x;
    VertexSets tuples_y;
    PartialMap phi;  // X vertex -> Y vertex
  };

  std::vector<Candidate> first_round(const Graph& x_graph, const Graph& y_graph, Vertex x,
                                     const std::vector<Vertex>& legal);
  std::vector<Candidate> later_round(const Graph& x_graph, const Graph& y_graph, Vertex x,
                                     const std::vector<Vertex>& legal, const VertexSets& tx,
                                     const VertexSets& ty, const PartialMap& phi_x,
                                     std::span<const PickPair> picks_xy, std::size_t round);
  std::optional<Vertex> hand_to_solver(const GameState& state, const std::string& reason);

  Graph g_;
  Graph h_;
  std::size_t k_;
  StrategyOptions options_;
  GameSolver solver_;
  StrategyContext context_;
};

struct PlayoutResult {
  Winner winner = Winner::SpoilerWins;
  bool referee_agrees = false;  // solver value of the final position matches
  std::vector<PickPair> picks;
  StrategyContext context;
};

// One game with Spoiler choosing board and vertex uniformly at random.
PlayoutResult random_spoiler_playout(ScriptedDuplicator& duplicator, const Graph& g, const Graph& h,
                                     std::size_t k, std::uint64_t seed);

}  // namespace folab
