#pragma once

// Brute-force reference implementations. They share nothing with the library beyond
// Graph and Rational, and favour the plainest enumeration over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"

namespace oracle {

using folab::Edge;
using folab::Graph;
using folab::Rational;
using folab::Vertex;

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::size_t edges_inside(const Graph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++count;
  }
  return count;
}

inline Rational max_density(const Graph& g) {
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << g.vertex_count()); ++mask) {
    best = std::max(best, Rational(static_cast<std::int64_t>(edges_inside(g, mask)), std::popcount(mask)));
  }
  return best;
}

inline bool strictly_balanced(const Graph& g) {
  const std::uint32_t all = (1u << g.vertex_count()) - 1;
  const Rational whole(static_cast<std::int64_t>(g.edge_count()), g.vertex_count());
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    if (Rational(static_cast<std::int64_t>(edges_inside(g, mask)), std::popcount(mask)) >= whole) return false;
  }
  return true;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!g.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline constexpr std::size_t kFar = static_cast<std::size_t>(-1);

// Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> all_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kFar));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] != kFar && d[k][j] != kFar) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// walk[i][x][y]: some walk of length exactly i joins x and y.
inline std::vector<std::vector<std::vector<bool>>> walks(const Graph& g, std::size_t max_len) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::vector<bool>>> w(max_len + 1, std::vector<std::vector<bool>>(n, std::vector<bool>(n)));
  for (Vertex v = 0; v < n; ++v) w[0][v][v] = true;
  for (std::size_t i = 1; i <= max_len; ++i) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex z : g.neighbors(y)) {
          if (w[i - 1][x][z]) {
            w[i][x][y] = true;
            break;
          }
        }
      }
    }
  }
  return w;
}

// Injective maps V(pattern) -> V(host) carrying edges onto edges.
inline std::uint64_t injective_maps(const Graph& host, const Graph& pattern) {
  const std::size_t k = pattern.vertex_count();
  std::vector<Vertex> image(k);
  std::vector<bool> used(host.vertex_count());
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == k) {
      for (const Edge& e : pattern.edges()) {
        if (!host.adjacent(image[e.u], image[e.v])) return;
      }
      ++count;
      return;
    }
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[i] = v;
      go(i + 1);
      used[v] = false;
    }
  };
  go(0);
  return count;
}

// f_alpha(S, H) > 0 for every S with H a proper subgraph of S, S induced on its
// vertices. S may keep the root set and add a root-root edge that H leaves out.
inline bool alpha_safe(const Graph& big, std::uint32_t roots, std::size_t small_edge_count, const Rational& alpha) {
  const std::size_t n = big.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & roots) != roots) continue;
    if (mask == roots && edges_inside(big, mask) == small_edge_count) continue;
    const auto v_rel = static_cast<std::int64_t>(std::popcount(mask) - std::popcount(roots));
    const auto e_rel = static_cast<std::int64_t>(edges_inside(big, mask) - small_edge_count);
    if (Rational(v_rel) - alpha * Rational(e_rel) <= 0) return false;
  }
  return true;
}

// Plain minimax over pick sequences, no memo. Picks are (g, h) pairs.
inline bool duplicator_wins(const Graph& g, const Graph& h, std::vector<std::pair<Vertex, Vertex>>& picks,
                            std::size_t rounds) {
  for (std::size_t i = 0; i < picks.size(); ++i) {
    for (std::size_t j = 0; j < picks.size(); ++j) {
      const bool eq_g = picks[i].first == picks[j].first;
      const bool eq_h = picks[i].second == picks[j].second;
      if (eq_g != eq_h) return false;
      if (g.adjacent(picks[i].first, picks[j].first) != h.adjacent(picks[i].second, picks[j].second)) return false;
    }
  }
  if (rounds == 0) return true;
  for (int board = 0; board < 2; ++board) {
    const Graph& from = board == 0 ? g : h;
    const Graph& to = board == 0 ? h : g;
    for (Vertex x = 0; x < from.vertex_count(); ++x) {
      bool saved = false;
      for (Vertex y = 0; y < to.vertex_count() && !saved; ++y) {
        picks.emplace_back(board == 0 ? x : y, board == 0 ? y : x);
        saved = duplicator_wins(g, h, picks, rounds - 1);
        picks.pop_back();
      }
      if (!saved) return false;
    }
  }
  return true;
}

inline bool duplicator_wins(const Graph& g, const Graph& h, std::size_t rounds) {
  std::vector<std::pair<Vertex, Vertex>> picks;
  return duplicator_wins(g, h, picks, rounds);
}

}  // namespace oracle
