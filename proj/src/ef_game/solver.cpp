#include "folab/ef_game/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "folab/graph_core/errors.hpp"

namespace folab {

std::size_t GameSolver::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  return boost::hash_range(key.begin(), key.end());
}

GameSolver::GameSolver(Graph g, Graph h) : g_(std::move(g)), h_(std::move(h)) {
  if (g_.vertex_count() > 0xFFFF || h_.vertex_count() > 0xFFFF) {
    throw CapacityError("solver: boards larger than 65535 vertices");
  }
}

void GameSolver::check_cost(std::size_t rounds_left) const {
  const double base = static_cast<double>(g_.vertex_count()) * static_cast<double>(h_.vertex_count());
  const double cost = std::pow(base, static_cast<double>(rounds_left));
  if (cost > kSolverCostGuard) {
    throw CapacityError("solver: (v(G)*v(H))^k = " + std::to_string(cost) +
                        " exceeds the cost guard");
  }
}

std::vector<PickPair> GameSolver::canonical(std::span<const PickPair> picks) {
  std::vector<PickPair> out(picks.begin(), picks.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GameSolver::survives(const std::vector<PickPair>& picks, std::size_t rounds_left,
                          PendingPick pick, Vertex* reply) {
  const bool on_g = pick.board == Board::G;
  for (const PickPair& p : picks) {
    if ((on_g ? p.g : p.h) == pick.vertex) {
      if (reply) *reply = on_g ? p.h : p.g;
      return duplicator_wins(picks, rounds_left - 1);
    }
  }
  const Graph& target = on_g ? h_ : g_;
  for (Vertex w = 0; w < target.vertex_count(); ++w) {
    const PickPair next = on_g ? PickPair{pick.vertex, w} : PickPair{w, pick.vertex};
    const bool fresh = std::none_of(picks.begin(), picks.end(), [&](const PickPair& p) {
      return (on_g ? p.h : p.g) == w;
    });
    if (!fresh || !compatible(g_, h_, picks, next)) continue;
    std::vector<PickPair> grown = picks;
    grown.insert(std::upper_bound(grown.begin(), grown.end(), next), next);
    if (duplicator_wins(grown, rounds_left - 1)) {
      if (reply) *reply = w;
      return true;
    }
  }
  return false;
}

bool GameSolver::duplicator_wins(const std::vector<PickPair>& picks, std::size_t rounds_left) {
  if (rounds_left == 0) return true;
  std::vector<std::uint32_t> key;
  key.reserve(picks.size() + 1);
  key.push_back(static_cast<std::uint32_t>(rounds_left));
  for (const PickPair& p : picks) key.push_back((p.g << 16) | p.h);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = true;
  for (Board board : {Board::G, Board::H}) {
    const Graph& source = board == Board::G ? g_ : h_;
    for (Vertex v = 0; v < source.vertex_count() && result; ++v) {
      result = survives(picks, rounds_left, PendingPick{board, v}, nullptr);
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Winner GameSolver::value(std::span<const PickPair> picks, std::size_t rounds_left) {
  check_cost(rounds_left);
  if (!partial_isomorphism_ok(g_, h_, picks)) return Winner::SpoilerWins;
  return duplicator_wins(canonical(picks), rounds_left) ? Winner::DuplicatorWins
                                                        : Winner::SpoilerWins;
}

std::optional<Vertex> GameSolver::winning_reply(std::span<const PickPair> picks,
                                                std::size_t rounds_left, PendingPick pick) {
  if (rounds_left == 0) throw DomainError("winning_reply: no rounds left");
  check_cost(rounds_left);
  require_vertex(pick.board == Board::G ? g_ : h_, pick.vertex);
  if (!partial_isomorphism_ok(g_, h_, picks)) return std::nullopt;
  Vertex reply = 0;
  if (survives(canonical(picks), rounds_left, pick, &reply)) return reply;
  return std::nullopt;
}

std::optional<PendingPick> GameSolver::winning_pick(std::span<const PickPair> picks,
                                                    std::size_t rounds_left) {
  if (rounds_left == 0) return std::nullopt;
  check_cost(rounds_left);
  const auto base = canonical(picks);
  for (Board board : {Board::G, Board::H}) {
    const Graph& source = board == Board::G ? g_ : h_;
    for (Vertex v = 0; v < source.vertex_count(); ++v) {
      if (!survives(base, rounds_left, PendingPick{board, v}, nullptr)) return PendingPick{board, v};
    }
  }
  return std::nullopt;
}

Winner solve(const Graph& g, const Graph& h, std::size_t k) {
  GameSolver solver(g, h);
  return solver.value({}, k);
}

}  // namespace folab
