#include "folab/graph_core/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "folab/graph_core/balance_flow.hpp"
#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

void require_nonempty(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("density of the empty graph is undefined");
}

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw CapacityError(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(cap));
  }
}

std::vector<Vertex> mask_vertices(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex x = 0; mask != 0; ++x, mask >>= 1)
    if (mask & 1U) out.push_back(x);
  return out;
}

}  // namespace

Rational density(const Graph& g) {
  require_nonempty(g);
  return Rational(static_cast<std::int64_t>(g.edge_count()),
                  static_cast<std::int64_t>(g.vertex_count()));
}

std::vector<std::uint16_t> induced_edge_counts(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw CapacityError("induced_edge_counts: too many vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  std::vector<std::uint16_t> counts(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < counts.size(); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    counts[mask] = static_cast<std::uint16_t>(counts[rest] + std::popcount(adj[low] & rest));
  }
  return counts;
}

DensestSubset max_density(const Graph& g, std::size_t cap) {
  require_nonempty(g);
  require_cap(g, cap, "max_density");
  const auto counts = induced_edge_counts(g);
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < counts.size(); ++mask) {
    if (best == 0) {
      best = mask;
      continue;
    }
    // counts[mask]/|mask| vs counts[best]/|best|
    const auto lhs = std::int64_t{counts[mask]} * std::popcount(best);
    const auto rhs = std::int64_t{counts[best]} * std::popcount(mask);
    if (lhs > rhs || (lhs == rhs && mask_vertices(mask) < mask_vertices(best))) best = mask;
  }
  return {Rational(std::int64_t{counts[best]}, std::int64_t{std::popcount(best)}),
          mask_vertices(best)};
}

bool is_strictly_balanced(const Graph& g, std::size_t cap) {
  require_nonempty(g);
  require_cap(g, cap, "is_strictly_balanced");
  const auto counts = induced_edge_counts(g);
  const std::uint32_t full = static_cast<std::uint32_t>(counts.size() - 1);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::int64_t{counts[mask]} * n >= e * std::popcount(mask)) return false;
  }
  return true;
}

bool is_strictly_balanced_uncapped(const Graph& g) {
  require_nonempty(g);
  return strictly_balanced_by_flow(g, {}, 0);
}

namespace {

struct AutomorphismSearch {
  const Graph& g;
  std::vector<Vertex> image;
  std::vector<std::uint8_t> used;
  std::uint64_t count = 0;

  void extend(Vertex x) {
    if (x == g.vertex_count()) {
      ++count;
      return;
    }
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      if (used[y] || g.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (Vertex w = 0; w < x && ok; ++w) ok = g.adjacent(x, w) == g.adjacent(y, image[w]);
      if (!ok) continue;
      used[y] = 1;
      image[x] = y;
      extend(x + 1);
      used[y] = 0;
    }
  }
};

}  // namespace

std::uint64_t automorphism_count(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "automorphism_count");
  AutomorphismSearch search{g, std::vector<Vertex>(g.vertex_count()),
                            std::vector<std::uint8_t>(g.vertex_count(), 0)};
  search.extend(0);
  return search.count;
}

}  // namespace folab
