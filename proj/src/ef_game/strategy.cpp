#include "folab/ef_game/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "folab/ef_game/chain.hpp"
#include "folab/ext_pairs/cyclic.hpp"
#include "folab/ext_pairs/extensions.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/subgraph.hpp"
#include "folab/graph_core/traversal.hpp"

namespace folab {

namespace {

// Copies of a candidate are capped per anchor; the solver ranks the survivors anyway.
constexpr std::size_t kCopiesPerAnchor = 4;
constexpr std::size_t kPathsPerEnd = 8;

std::vector<Vertex> flatten(const VertexSets& tuples) {
  std::vector<Vertex> out;
  for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

PartialMap invert(const PartialMap& map, std::size_t target_size) {
  PartialMap inv(target_size, kUnmapped);
  for (Vertex a = 0; a < map.size(); ++a) {
    if (map[a] != kUnmapped) inv[map[a]] = a;
  }
  return inv;
}

// Induced copies of x_graph[part] in y_graph sending x to y.
std::vector<PartialMap> induced_copies(const Graph& x_graph, const Graph& y_graph,
                                       const std::vector<Vertex>& part, Vertex x, Vertex y,
                                       std::size_t limit) {
  const InducedGraph piece = induced(x_graph, part);
  const auto root = static_cast<Vertex>(
      std::find(piece.original.begin(), piece.original.end(), x) - piece.original.begin());
  const RootedPair pattern(piece.graph, {root}, {});
  std::vector<PartialMap> out;
  const Vertex anchor[1] = {y};
  for_each_extension(y_graph, pattern, anchor, ExtensionQuery{true, {}},
                     [&](std::span<const Vertex> image) {
                       PartialMap m(x_graph.vertex_count(), kUnmapped);
                       for (std::size_t i = 0; i < image.size(); ++i) m[piece.original[i]] = image[i];
                       out.push_back(std::move(m));
                       return out.size() < limit;
                     });
  return out;
}

// Shortest paths start -> ... -> some vertex at distance 0, following dist downwards.
// When `end` is given the last vertex must be it.
std::vector<std::vector<Vertex>> descending_paths(const Graph& g, const std::vector<std::size_t>& dist,
                                                  Vertex start, std::optional<Vertex> end,
                                                  std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{start};
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const Vertex tip = path.back();
    if (dist[tip] == 0) {
      if (!end || tip == *end) out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(tip)) {
      if (dist[w] + 1 != dist[tip]) continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool induced_iso_on(const Graph& x_graph, const Graph& y_graph, const std::vector<Vertex>& part,
                    const PartialMap& m) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (x_graph.adjacent(part[i], part[j]) != y_graph.adjacent(m[part[i]], m[part[j]])) {
        return false;
      }
    }
  }
  return true;
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << std::min<std::size_t>(e, 62); }

}  // namespace

const char* to_string(StrategyPhase phase) {
  switch (phase) {
    case StrategyPhase::S1: return "S1";
    case StrategyPhase::Sr: return "Sr";
    case StrategyPhase::S1r: return "S1r";
    case StrategyPhase::NextRound: return "next-round";
    case StrategyPhase::Solver: return "solver";
    case StrategyPhase::Mirror: return "mirror";
  }
  return "?";
}

ScriptedDuplicator::ScriptedDuplicator(const Graph& g, const Graph& h, std::size_t k,
                                       StrategyOptions options)
    : g_(g), h_(h), k_(k), options_(std::move(options)), solver_(g, h) {
  if (k_ == 0) throw DomainError("ScriptedDuplicator: need k >= 1");
  const double cost = std::pow(static_cast<double>(g.vertex_count()) * h.vertex_count(),
                               static_cast<double>(k));
  if (cost > kSolverCostGuard) throw CapacityError("ScriptedDuplicator: boards exceed the solver guard");
  if (options_.mirror && !(g == h)) throw DomainError("ScriptedDuplicator: mirror needs G = H");
  reset();
}

void ScriptedDuplicator::reset() {
  context_ = StrategyContext{};
  context_.phase = options_.mirror ? StrategyPhase::Mirror : StrategyPhase::S1;
  context_.phi.assign(g_.vertex_count(), kUnmapped);
}

std::optional<Vertex> ScriptedDuplicator::hand_to_solver(const GameState& state,
                                                         const std::string& reason) {
  if (!reason.empty()) {
    context_.fallback = true;
    context_.fallback_reason = reason;
  }
  context_.phase = StrategyPhase::Solver;
  ++context_.solver_moves;
  if (auto w = solver_.winning_reply(state.picks(), state.rounds_left(), *state.pending())) return w;
  const auto legal = state.legal_replies();
  if (legal.empty()) return std::nullopt;
  return legal.front();
}

std::vector<ScriptedDuplicator::Candidate> ScriptedDuplicator::first_round(
    const Graph& x_graph, const Graph& y_graph, Vertex x, const std::vector<Vertex>& legal) {
  std::vector<Candidate> out;
  const std::size_t m = pow2(k_ - 1);
  const Rational bound = Rational(1) / options_.alpha.value();
  if (m < 2 || !has_cyclic_extension(x_graph, make_subgraph(x_graph, {x}, {}), m)) {
    for (Vertex y : legal) {
      if (m >= 2 && has_cyclic_extension(y_graph, make_subgraph(y_graph, {y}, {}), m)) continue;
      PartialMap phi(x_graph.vertex_count(), kUnmapped);
      phi[x] = y;
      out.push_back({y, {{x}}, {{y}}, std::move(phi)});
    }
    return out;
  }
  const ExtensionChain chain = build_extension_chain(x_graph, x, k_, options_.b);
  if (chain.guard_exceeded || !chain.steps_valid) return out;
  std::vector<Vertex> part;
  if (chain.closure_density < bound) {
    part = chain.graphs.back().vertices;
  } else if (chain.closure_density == bound && chain.mu) {
    part = chain.graphs[*chain.mu].vertices;
  } else {
    return out;
  }
  for (Vertex y : legal) {
    for (PartialMap& phi : induced_copies(x_graph, y_graph, part, x, y, kCopiesPerAnchor)) {
      std::vector<Vertex> image;
      for (Vertex v : part) image.push_back(phi[v]);
      std::sort(image.begin(), image.end());
      out.push_back({y, {part}, {image}, std::move(phi)});
    }
  }
  return out;
}

std::vector<ScriptedDuplicator::Candidate> ScriptedDuplicator::later_round(
    const Graph& x_graph, const Graph& y_graph, Vertex x, const std::vector<Vertex>& legal,
    const VertexSets& tx, const VertexSets& ty, const PartialMap& phi_x,
    std::span<const PickPair> picks_xy, std::size_t round) {
  std::vector<Candidate> out;
  const auto ux = flatten(tx);
  const auto uy = flatten(ty);
  const auto is_legal = [&](Vertex y) { return std::binary_search(legal.begin(), legal.end(), y); };

  if (std::binary_search(ux.begin(), ux.end(), x)) {
    if (phi_x[x] != kUnmapped && is_legal(phi_x[x])) out.push_back({phi_x[x], tx, ty, phi_x});
    return out;
  }
  if (round >= k_) {
    // Last round: any reply matching the picks wins.
    for (Vertex y : legal) {
      if (compatible(x_graph, y_graph, picks_xy, PickPair{x, y})) {
        out.push_back({y, tx, ty, phi_x});
      }
    }
    return out;
  }
  const std::size_t reach = pow2(k_ - round);
  const auto dist_x = bfs_distances(x_graph, ux);
  const auto dist_y = bfs_distances(y_graph, uy);

  if (dist_x[x] <= reach) {
    // Join x to the nearest tilde part along a shortest path; paths ending on a picked
    // vertex are tried first.
    auto paths = descending_paths(x_graph, dist_x, x, std::nullopt, kPathsPerEnd);
    std::stable_sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
      auto picked = [&](Vertex v) {
        return std::any_of(picks_xy.begin(), picks_xy.end(), [&](const PickPair& p) { return p.g == v; });
      };
      return picked(a.back()) && !picked(b.back());
    });
    for (const auto& path : paths) {
      const Vertex end = path.back();
      const auto j = static_cast<std::size_t>(
          std::find_if(tx.begin(), tx.end(), [&](const auto& t) {
            return std::find(t.begin(), t.end(), end) != t.end();
          }) - tx.begin());
      std::vector<Vertex> grown = tx[j];
      grown.insert(grown.end(), path.begin(), path.end() - 1);
      std::sort(grown.begin(), grown.end());
      for (Vertex y : legal) {
        if (dist_y[y] != dist_x[x]) continue;
        for (const auto& ypath : descending_paths(y_graph, dist_y, y, phi_x[end], kPathsPerEnd)) {
          PartialMap phi = phi_x;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) phi[path[i]] = ypath[i];
          if (!induced_iso_on(x_graph, y_graph, grown, phi)) continue;
          VertexSets nx = tx;
          VertexSets ny = ty;
          nx[j] = grown;
          ny[j].insert(ny[j].end(), ypath.begin(), ypath.end() - 1);
          std::sort(ny[j].begin(), ny[j].end());
          out.push_back({y, std::move(nx), std::move(ny), std::move(phi)});
        }
      }
    }
    return out;
  }

  // Far from every tilde part: a new part, x alone or with its cyclic extension.
  std::vector<Vertex> part{x};
  const Subgraph single = make_subgraph(x_graph, {x}, {});
  if (reach >= 2) {
    const auto exts = enumerate_cyclic_extensions(x_graph, single, reach);
    if (!exts.empty()) part = apply_extension(single, exts.front()).vertices;
  }
  for (Vertex y : legal) {
    if (dist_y[y] <= reach) continue;
    for (PartialMap& copy : induced_copies(x_graph, y_graph, part, x, y, kCopiesPerAnchor)) {
      std::vector<Vertex> image;
      for (Vertex v : part) image.push_back(copy[v]);
      std::sort(image.begin(), image.end());
      if (std::any_of(image.begin(), image.end(), [&](Vertex v) { return dist_y[v] <= reach; })) {
        continue;
      }
      if (reach >= 2 && has_cyclic_extension(y_graph, induced_subgraph(y_graph, image), reach)) {
        continue;
      }
      PartialMap phi = phi_x;
      for (Vertex v : part) phi[v] = copy[v];
      VertexSets nx = tx;
      VertexSets ny = ty;
      nx.push_back(part);
      ny.push_back(std::move(image));
      out.push_back({y, std::move(nx), std::move(ny), std::move(phi)});
    }
  }
  return out;
}

std::optional<Vertex> ScriptedDuplicator::reply(const GameState& state) {
  if (!state.pending()) throw DomainError("reply: no pending pick");
  if (!(state.graph_g() == g_) || !(state.graph_h() == h_)) {
    throw DomainError("reply: state is on different boards");
  }
  const auto legal = state.legal_replies();
  if (legal.empty()) return std::nullopt;
  if (auto forced = state.forced_reply()) {
    ++context_.scripted_moves;
    return forced;
  }
  const PendingPick pick = *state.pending();
  if (context_.phase == StrategyPhase::Mirror) {
    ++context_.scripted_moves;
    return pick.vertex;
  }
  if (context_.phase == StrategyPhase::Solver) return hand_to_solver(state, "");

  const bool on_g = pick.board == Board::G;
  const Graph& x_graph = on_g ? g_ : h_;
  const Graph& y_graph = on_g ? h_ : g_;
  const VertexSets& tx = on_g ? context_.tilde_g : context_.tilde_h;
  const VertexSets& ty = on_g ? context_.tilde_h : context_.tilde_g;
  const PartialMap phi_x = on_g ? context_.phi : invert(context_.phi, h_.vertex_count());
  std::vector<PickPair> picks_xy;
  for (const PickPair& p : state.picks()) {
    picks_xy.push_back(on_g ? p : PickPair{p.h, p.g});
  }
  const std::size_t round = state.rounds_played() + 1;

  std::vector<Candidate> candidates =
      round == 1 ? first_round(x_graph, y_graph, pick.vertex, legal)
                 : later_round(x_graph, y_graph, pick.vertex, legal, tx, ty, phi_x, picks_xy, round);
  if (candidates.empty()) return hand_to_solver(state, "no script candidate in round " + std::to_string(round));

  // Rank by the certificate each candidate yields after this round.
  std::vector<int> rank(candidates.size(), 2);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& c = candidates[i];
    std::vector<PickPair> after = picks_xy;
    after.push_back({pick.vertex, c.y});
    const EquivalenceLevel level{k_, round, options_.b};
    if (c.tuples_x.size() <= round &&
        regular_equivalence(x_graph, y_graph, c.tuples_x, c.tuples_y, after, level, c.tuples_x.size(), &c.phi)) {
      rank[i] = 0;
    } else if (c.tuples_x.size() == 1 && round < k_ &&
               kr_equivalence(x_graph, y_graph, c.tuples_x[0], c.tuples_y[0], after, level, &c.phi)) {
      rank[i] = 1;
    }
  }
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  std::optional<std::size_t> chosen;
  for (std::size_t i : order) {
    std::vector<PickPair> after = state.picks();
    after.push_back(on_g ? PickPair{pick.vertex, candidates[i].y} : PickPair{candidates[i].y, pick.vertex});
    if (solver_.value(after, state.rounds_left() - 1) == Winner::DuplicatorWins) {
      chosen = i;
      break;
    }
  }
  if (!chosen) {
    if (solver_.winning_reply(state.picks(), state.rounds_left(), pick)) {
      ++context_.script_gaps;
      return hand_to_solver(state, "script candidates lose in round " + std::to_string(round));
    }
    chosen = order.front();
  }

  Candidate& c = candidates[*chosen];
  const StrategyPhase before = context_.phase;
  if (rank[*chosen] == 0) {
    context_.phase = StrategyPhase::Solver;
    context_.certified = EquivalenceCertificate::Kind::RegularKRL;
  } else if (rank[*chosen] == 1) {
    context_.phase = StrategyPhase::Sr;
    context_.certified = EquivalenceCertificate::Kind::KR;
  } else {
    context_.phase = (before == StrategyPhase::S1 || before == StrategyPhase::Sr) ? StrategyPhase::S1r
                                                                                 : StrategyPhase::NextRound;
    context_.certified.reset();
  }
  if (on_g) {
    context_.tilde_g = std::move(c.tuples_x);
    context_.tilde_h = std::move(c.tuples_y);
    context_.phi = std::move(c.phi);
  } else {
    context_.tilde_h = std::move(c.tuples_x);
    context_.tilde_g = std::move(c.tuples_y);
    context_.phi = invert(c.phi, g_.vertex_count());
  }
  ++context_.scripted_moves;
  return c.y;
}

PlayoutResult random_spoiler_playout(ScriptedDuplicator& duplicator, const Graph& g, const Graph& h,
                                     std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  duplicator.reset();
  GameState state(g, h, k);
  PlayoutResult result;
  while (!state.finished()) {
    if (state.side_to_move() == Side::Spoiler) {
      const std::size_t total = g.vertex_count() + h.vertex_count();
      const auto pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
      if (pick < g.vertex_count()) {
        state.spoiler_pick(Board::G, static_cast<Vertex>(pick));
      } else {
        state.spoiler_pick(Board::H, static_cast<Vertex>(pick - g.vertex_count()));
      }
    } else {
      auto y = duplicator.reply(state);
      if (!y) break;
      state.duplicator_reply(*y);
    }
  }
  result.winner = state.winner();
  result.picks = state.picks();
  const Winner referee = state.pending() ? Winner::SpoilerWins
                                         : duplicator.solver().value(state.picks(), 0);
  result.referee_agrees = referee == result.winner;
  result.context = duplicator.context();
  return result;
}

}  // namespace folab
