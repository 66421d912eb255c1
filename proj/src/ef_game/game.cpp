#include "folab/ef_game/game.hpp"

#include <algorithm>

#include "folab/graph_core/errors.hpp"

namespace folab {

const char* to_string(Winner w) {
  return w == Winner::SpoilerWins ? "spoiler" : "duplicator";
}

bool compatible(const Graph& g, const Graph& h, std::span<const PickPair> picks, PickPair next) {
  for (const PickPair& p : picks) {
    if ((p.g == next.g) != (p.h == next.h)) return false;
    if (p.g != next.g && g.adjacent(p.g, next.g) != h.adjacent(p.h, next.h)) return false;
  }
  return true;
}

bool partial_isomorphism_ok(const Graph& g, const Graph& h, std::span<const PickPair> picks) {
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (!compatible(g, h, picks.first(i), picks[i])) return false;
  }
  return true;
}

GameState::GameState(Graph g, Graph h, std::size_t rounds_total)
    : g_(std::move(g)), h_(std::move(h)), rounds_total_(rounds_total) {}

bool GameState::used(Board b, Vertex v) const {
  return std::any_of(picks_.begin(), picks_.end(), [&](const PickPair& p) {
    return (b == Board::G ? p.g : p.h) == v;
  });
}

std::optional<Vertex> GameState::forced_reply() const {
  if (!pending_) return std::nullopt;
  for (const PickPair& p : picks_) {
    if (pending_->board == Board::G && p.g == pending_->vertex) return p.h;
    if (pending_->board == Board::H && p.h == pending_->vertex) return p.g;
  }
  return std::nullopt;
}

std::vector<Vertex> GameState::legal_replies() const {
  std::vector<Vertex> out;
  if (!pending_) return out;
  if (auto forced = forced_reply()) {
    out.push_back(*forced);
    return out;
  }
  const Board target = other(pending_->board);
  for (Vertex v = 0; v < graph(target).vertex_count(); ++v) {
    if (!used(target, v)) out.push_back(v);
  }
  return out;
}

bool GameState::is_legal_reply(Vertex v) const {
  if (!pending_) return false;
  if (auto forced = forced_reply()) return v == *forced;
  const Board target = other(pending_->board);
  return graph(target).contains_vertex(v) && !used(target, v);
}

void GameState::spoiler_pick(Board board, Vertex v) {
  if (pending_ || picks_.size() >= rounds_total_) throw DomainError("spoiler_pick: not Spoiler's turn");
  require_vertex(graph(board), v);
  pending_ = PendingPick{board, v};
}

void GameState::duplicator_reply(Vertex v) {
  if (!pending_) throw DomainError("duplicator_reply: no pending pick");
  if (!is_legal_reply(v)) throw DomainError("duplicator_reply: illegal vertex " + std::to_string(v));
  picks_.push_back(pending_->board == Board::G ? PickPair{pending_->vertex, v}
                                               : PickPair{v, pending_->vertex});
  pending_.reset();
}

bool GameState::finished() const {
  if (pending_) return legal_replies().empty();
  return picks_.size() >= rounds_total_;
}

Winner GameState::winner() const {
  if (!finished()) throw DomainError("winner: game not finished");
  if (pending_) return Winner::SpoilerWins;
  return partial_isomorphism_ok(g_, h_, picks_) ? Winner::DuplicatorWins : Winner::SpoilerWins;
}

bool partial_isomorphism_ok(const GameState& state) {
  if (state.pending()) throw DomainError("partial_isomorphism_ok: a pick is pending");
  return partial_isomorphism_ok(state.graph_g(), state.graph_h(), state.picks());
}

}  // namespace folab
