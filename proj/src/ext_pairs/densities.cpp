#include "folab/ext_pairs/densities.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "folab/graph_core/balance_flow.hpp"
#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

// Relative edge counts e(K,H) for K = G[roots + S], S ranging over bitmasks of the
// new vertices (bit i = new_vertices()[i]).
struct IntermediateTable {
  std::vector<std::uint32_t> rel_edges;
  std::vector<std::uint32_t> cross_edges;  // edges of K outside E(H) touching a root
  std::size_t new_count = 0;
};

IntermediateTable tabulate(const RootedPair& pair, std::size_t cap) {
  const Graph& g = pair.big();
  if (g.vertex_count() > cap) {
    throw CapacityError("pair enumeration: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(cap));
  }
  const auto& fresh = pair.new_vertices();
  const std::size_t count = fresh.size();
  std::vector<int> bit(g.vertex_count(), -1);
  for (std::size_t i = 0; i < count; ++i) bit[fresh[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> new_nbrs(count, 0);
  std::vector<std::uint32_t> root_degree(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (Vertex y : g.neighbors(fresh[i])) {
      if (bit[y] >= 0) {
        new_nbrs[i] |= 1U << bit[y];
      } else {
        ++root_degree[i];
      }
    }
  }
  const auto extra = static_cast<std::uint32_t>(pair.extra_root_edges().size());
  IntermediateTable table;
  table.new_count = count;
  table.rel_edges.assign(std::size_t{1} << count, extra);
  table.cross_edges.assign(std::size_t{1} << count, extra);
  for (std::uint32_t mask = 1; mask < table.rel_edges.size(); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    table.rel_edges[mask] =
        table.rel_edges[rest] + std::popcount(new_nbrs[low] & rest) + root_degree[low];
    table.cross_edges[mask] = table.cross_edges[rest] + root_degree[low];
  }
  return table;
}

std::vector<Vertex> k_vertices(const RootedPair& pair, std::uint32_t mask) {
  std::vector<Vertex> out(pair.roots().begin(), pair.roots().end());
  for (std::size_t i = 0; i < pair.new_vertices().size(); ++i)
    if (mask & (1U << i)) out.push_back(pair.new_vertices()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

void require_new_vertex(const RootedPair& pair) {
  if (pair.new_vertices().empty()) throw DomainError("pair has no new vertices (v(G,H) = 0)");
}

}  // namespace

RelCounts rel_counts(const RootedPair& pair) {
  return {pair.new_vertices().size(), pair.big().edge_count() - pair.small_edges().size()};
}

Rational rel_density(const RootedPair& pair) {
  require_new_vertex(pair);
  const auto c = rel_counts(pair);
  return Rational(static_cast<std::int64_t>(c.edges), static_cast<std::int64_t>(c.vertices));
}

DensestExtension max_rel_density(const RootedPair& pair, std::size_t cap) {
  require_new_vertex(pair);
  const auto table = tabulate(pair, cap);
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < table.rel_edges.size(); ++mask) {
    if (best == 0) {
      best = mask;
      continue;
    }
    const auto lhs = std::int64_t{table.rel_edges[mask]} * std::popcount(best);
    const auto rhs = std::int64_t{table.rel_edges[best]} * std::popcount(mask);
    if (lhs > rhs || (lhs == rhs && k_vertices(pair, mask) < k_vertices(pair, best))) best = mask;
  }
  return {Rational(std::int64_t{table.rel_edges[best]}, std::int64_t{std::popcount(best)}),
          k_vertices(pair, best)};
}

std::size_t e_min(const RootedPair& pair, std::size_t cap) {
  const Rational top = max_rel_density(pair, cap).density;
  const auto table = tabulate(pair, cap);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t mask = 1; mask < table.rel_edges.size(); ++mask) {
    const Rational rho(std::int64_t{table.rel_edges[mask]}, std::int64_t{std::popcount(mask)});
    if (rho == top && table.cross_edges[mask] > 0) {
      best = std::min<std::size_t>(best, table.rel_edges[mask]);
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw DomainError("no densest extension has an edge joining it to H");
  }
  return best;
}

Rational f_alpha(const RootedPair& pair, const Alpha& alpha) {
  const auto c = rel_counts(pair);
  return Rational(static_cast<std::int64_t>(c.vertices)) -
         alpha.value() * Rational(static_cast<std::int64_t>(c.edges));
}

bool is_alpha_safe(const RootedPair& pair, const Alpha& alpha, std::size_t cap) {
  const auto table = tabulate(pair, cap);
  // mask 0 is a proper S only when G has extra edges among the roots.
  if (table.rel_edges[0] > 0) return false;
  for (std::uint32_t mask = 1; mask < table.rel_edges.size(); ++mask) {
    const Rational f = Rational(std::int64_t{std::popcount(mask)}) -
                       alpha.value() * Rational(std::int64_t{table.rel_edges[mask]});
    if (f <= 0) return false;
  }
  return true;
}

bool is_strictly_balanced_pair(const RootedPair& pair, std::size_t cap) {
  require_new_vertex(pair);
  const auto table = tabulate(pair, cap);
  const std::uint32_t full = static_cast<std::uint32_t>(table.rel_edges.size() - 1);
  const auto total = std::int64_t{table.rel_edges[full]};
  const auto count = static_cast<std::int64_t>(table.new_count);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::int64_t{table.rel_edges[mask]} * count >= total * std::popcount(mask)) return false;
  }
  return true;
}

bool is_strictly_balanced_pair_uncapped(const RootedPair& pair) {
  require_new_vertex(pair);
  return strictly_balanced_by_flow(pair.big(), pair.roots(), pair.small_edges().size());
}

}  // namespace folab
