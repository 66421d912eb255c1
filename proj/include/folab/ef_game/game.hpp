#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "folab/graph_core/graph.hpp"

namespace folab {

// Which of the two boards a vertex lives on.
enum class Board { G, H };

enum class Side { Spoiler, Duplicator };

enum class Winner { SpoilerWins, DuplicatorWins };

inline Board other(Board b) { return b == Board::G ? Board::H : Board::G; }

const char* to_string(Winner w);

// One round's outcome: a vertex of G matched with a vertex of H.
struct PickPair {
  Vertex g = 0;
  Vertex h = 0;
  friend auto operator<=>(const PickPair&, const PickPair&) = default;
  friend bool operator==(const PickPair&, const PickPair&) = default;
};

struct PendingPick {
  Board board = Board::G;
  Vertex vertex = 0;
};

// Adjacency and equality agree both ways on the picked pairs.
bool partial_isomorphism_ok(const Graph& g, const Graph& h, std::span<const PickPair> picks);

// Whether (g, h) can join a consistent pick list: same equality pattern and same
// adjacency to every earlier pair.
bool compatible(const Graph& g, const Graph& h, std::span<const PickPair> picks, PickPair next);

// EHR(G, H, k) in progress. Spoiler picks on either board; a repeated vertex forces
// its recorded partner, a fresh vertex needs a fresh reply.
class GameState {
 public:
  GameState(Graph g, Graph h, std::size_t rounds_total);

  const Graph& graph(Board b) const noexcept { return b == Board::G ? g_ : h_; }
  const Graph& graph_g() const noexcept { return g_; }
  const Graph& graph_h() const noexcept { return h_; }
  const std::vector<PickPair>& picks() const noexcept { return picks_; }
  std::size_t rounds_total() const noexcept { return rounds_total_; }
  std::size_t rounds_played() const noexcept { return picks_.size(); }
  std::size_t rounds_left() const noexcept { return rounds_total_ - picks_.size(); }
  Side side_to_move() const noexcept { return pending_ ? Side::Duplicator : Side::Spoiler; }
  const std::optional<PendingPick>& pending() const noexcept { return pending_; }

  // Partner recorded for an earlier pick of the same vertex.
  std::optional<Vertex> forced_reply() const;
  std::vector<Vertex> legal_replies() const;
  bool is_legal_reply(Vertex v) const;

  // DomainError when the move is out of turn or names a vertex off the board.
  void spoiler_pick(Board board, Vertex v);
  // DomainError when the reply is illegal.
  void duplicator_reply(Vertex v);

  // All rounds played, or Duplicator has no legal reply.
  bool finished() const;
  // Requires finished().
  Winner winner() const;

 private:
  bool used(Board b, Vertex v) const;

  Graph g_;
  Graph h_;
  std::size_t rounds_total_;
  std::vector<PickPair> picks_;
  std::optional<PendingPick> pending_;
};

bool partial_isomorphism_ok(const GameState& state);

}  // namespace folab
