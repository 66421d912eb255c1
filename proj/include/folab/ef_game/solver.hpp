#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "folab/ef_game/game.hpp"

namespace folab {

// Solving k more rounds on G, H is refused when (v(G) * v(H))^k exceeds this.
inline constexpr double kSolverCostGuard = 1e10;

// Memoized minimax over positions keyed by the set of distinct pick pairs and the
// number of rounds left. One instance serves any number of queries on the same boards.
class GameSolver {
 public:
  GameSolver(Graph g, Graph h);

  const Graph& graph_g() const noexcept { return g_; }
  const Graph& graph_h() const noexcept { return h_; }

  // Value of the position with Spoiler to move. CapacityError past the cost guard.
  Winner value(std::span<const PickPair> picks, std::size_t rounds_left);

  // A reply to `pick` after which Duplicator still wins the remaining rounds_left - 1
  // rounds, if one exists.
  std::optional<Vertex> winning_reply(std::span<const PickPair> picks, std::size_t rounds_left,
                                      PendingPick pick);

  // A Spoiler move that wins against every reply, if one exists.
  std::optional<PendingPick> winning_pick(std::span<const PickPair> picks,
                                          std::size_t rounds_left);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  void check_cost(std::size_t rounds_left) const;
  static std::vector<PickPair> canonical(std::span<const PickPair> picks);
  bool duplicator_wins(const std::vector<PickPair>& picks, std::size_t rounds_left);
  bool survives(const std::vector<PickPair>& picks, std::size_t rounds_left, PendingPick pick,
                Vertex* reply);

  Graph g_;
  Graph h_;
  std::unordered_map<std::vector<std::uint32_t>, bool, KeyHash> memo_;
};

Winner solve(const Graph& g, const Graph& h, std::size_t k);

}  // namespace folab
