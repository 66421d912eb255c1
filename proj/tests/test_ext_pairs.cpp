#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "folab/ext_pairs/cyclic.hpp"
#include "folab/ext_pairs/densities.hpp"
#include "folab/ext_pairs/extensions.hpp"
#include "folab/ext_pairs/rooted_pair.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/subgraph.hpp"
#include "oracles.hpp"

using namespace folab;

namespace {

RootedPair k3_over_edge() { return RootedPair(complete_graph(3), {0, 1}, {Edge(0, 1)}); }

// Pendant edge x1 - y rooted at x1.
RootedPair pendant() { return RootedPair(complete_graph(2), {0}, {}); }

Graph triangle_with_pendant() {
  const std::vector<Edge> extra{{0, 3}};
  return with_edges(disjoint_union(complete_graph(3), Graph(1)), extra);
}

struct RandomPair {
  Graph big;
  VertexTuple roots;
  std::vector<Edge> small;
  std::uint32_t root_mask = 0;
};

RandomPair random_pair(std::mt19937_64& rng, std::size_t max_v) {
  const std::size_t n = 2 + rng() % (max_v - 1);
  RandomPair p{oracle::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 4) / 3.0), {}, {}, 0};
  const std::size_t r = 1 + rng() % (n - 1);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  p.roots.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r));
  for (Vertex v : p.roots) p.root_mask |= 1u << v;
  for (const Edge& e : p.big.edges()) {
    if ((p.root_mask >> e.u & 1) && (p.root_mask >> e.v & 1) && (rng() & 3)) p.small.push_back(e);
  }
  return p;
}

}  // namespace

TEST(RelCounts, Examples) {
  const RelCounts a = rel_counts(k3_over_edge());
  EXPECT_EQ(a.vertices, 1u);
  EXPECT_EQ(a.edges, 2u);
  const RelCounts b = rel_counts(induced_pair(cycle_graph(5), {0, 1, 2, 3, 4}));
  EXPECT_EQ(b.vertices, 0u);
  EXPECT_EQ(b.edges, 0u);
  const RelCounts c = rel_counts(RootedPair(cycle_graph(4), {0}, {}));
  EXPECT_EQ(c.vertices, 3u);
  EXPECT_EQ(c.edges, 4u);
}

TEST(RelDensity, Examples) {
  EXPECT_EQ(rel_density(k3_over_edge()), Rational(2));
  EXPECT_EQ(rel_density(RootedPair(path_graph(3), {0}, {})), Rational(1));
  EXPECT_THROW(rel_density(induced_pair(complete_graph(3), {0, 1, 2})), DomainError);
}

TEST(MaxRelDensity, Examples) {
  const auto a = max_rel_density(k3_over_edge());
  EXPECT_EQ(a.density, Rational(2));
  EXPECT_EQ(a.vertices, (std::vector<Vertex>{0, 1, 2}));
  const auto b = max_rel_density(RootedPair(complete_graph(4), {0}, {}));
  EXPECT_EQ(b.density, Rational(2));
  EXPECT_EQ(b.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(max_rel_density(RootedPair(cycle_graph(15), {0}, {})), CapacityError);
}

TEST(EMin, Examples) {
  EXPECT_EQ(e_min(k3_over_edge()), 2u);
  EXPECT_EQ(e_min(RootedPair(star_graph(3), {1, 2, 3}, {})), 3u);
  EXPECT_EQ(e_min(pendant()), 1u);
  // The densest part is the isolated triangle, which has no edge to the root.
  const Graph detached = disjoint_union(Graph(1), complete_graph(3));
  EXPECT_THROW(e_min(RootedPair(detached, {0}, {})), DomainError);
}

TEST(FAlpha, Examples) {
  EXPECT_EQ(f_alpha(k3_over_edge(), Alpha(Rational(2, 5))), Rational(1, 5));
  EXPECT_EQ(f_alpha(RootedPair(path_graph(3), {0}, {}), Alpha(Rational(1, 2))), Rational(1));
  EXPECT_EQ(f_alpha(induced_pair(complete_graph(4), {0, 1, 2, 3}), Alpha(Rational(1, 3))), Rational(0));
  EXPECT_THROW(Alpha(Rational(1)), DomainError);
  EXPECT_THROW(Alpha(Rational(0)), DomainError);
}

TEST(Alpha, GameParameters) {
  EXPECT_EQ(Alpha::from_game_parameters(4, 8, 1).value(), Rational(15, 16));
  EXPECT_EQ(Alpha::from_game_parameters(5, 15, 2).value(), Rational(1) - 1 / (Rational(16) + Rational(15, 2)));
  EXPECT_THROW(Alpha::from_game_parameters(3, 4, 1), DomainError);
  EXPECT_THROW(Alpha::from_game_parameters(4, 9, 1), DomainError);
  EXPECT_THROW(Alpha::from_game_parameters(4, 6, 4), DomainError);
}

TEST(AlphaSafe, Examples) {
  EXPECT_TRUE(is_alpha_safe(k3_over_edge(), Alpha(Rational(2, 5))));
  EXPECT_FALSE(is_alpha_safe(k3_over_edge(), Alpha(Rational(1, 2))));
  const RootedPair isolated(disjoint_union(complete_graph(3), Graph(1)), {0, 1, 2},
                            {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  for (int num = 1; num < 10; ++num) EXPECT_TRUE(is_alpha_safe(isolated, Alpha(Rational(num, 10))));
}

TEST(StrictlyBalancedPair, Examples) {
  EXPECT_TRUE(is_strictly_balanced_pair(k3_over_edge()));
  // H = {0, 1}, pendant edges 0-2 and 1-3.
  const RootedPair two_pendants(Graph(4, std::vector<Edge>{{0, 2}, {1, 3}}), {0, 1}, {});
  EXPECT_FALSE(is_strictly_balanced_pair(two_pendants));
  EXPECT_TRUE(is_strictly_balanced_pair(pendant()));
  EXPECT_TRUE(is_strictly_balanced_pair(RootedPair(star_graph(3), {1, 2, 3}, {})));
}

TEST(PairIo, RoundTrip) {
  const RootedPair p(cycle_graph(5), {3, 1}, {});
  std::stringstream buf;
  write_pair(buf, p);
  const RootedPair q = read_pair(buf);
  EXPECT_EQ(q.big(), p.big());
  EXPECT_EQ(q.roots(), p.roots());
  EXPECT_EQ(q.small_edges(), p.small_edges());
  std::istringstream bad("vertices 3\nedge 0 1\nsmall 0\nsmall 1\nsmalledge 0 2\n");
  EXPECT_THROW(read_pair(bad), ParseError);
}

TEST(Extensions, Examples) {
  const std::vector<Vertex> a{0};
  EXPECT_EQ(enumerate_extensions(complete_graph(3), pendant(), a, false).size(), 2u);
  const Graph path = path_graph(3);
  const std::vector<Vertex> mid{1};
  EXPECT_EQ(enumerate_extensions(path, pendant(), mid, false).size(), 2u);
  EXPECT_EQ(enumerate_extensions(path, pendant(), a, false).size(), 1u);

  // Roots x1 = 0, x2 = 1; new vertex 2 adjacent to x1 only.
  const RootedPair one_sided(Graph(3, std::vector<Edge>{{0, 2}}), {0, 1}, {});
  const std::vector<Vertex> ab{0, 1};
  EXPECT_EQ(enumerate_extensions(complete_graph(3), one_sided, ab, true).size(), 0u);
  EXPECT_EQ(enumerate_extensions(complete_graph(3), one_sided, ab, false).size(), 1u);

  const std::vector<Vertex> wrong{0, 1};
  EXPECT_THROW(enumerate_extensions(path, pendant(), wrong, false), DomainError);
}

TEST(KtMaximal, Examples) {
  const Graph k3 = complete_graph(3);
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_TRUE(is_kt_maximal(k3, all, std::nullopt, pendant(), 1));

  const Graph tp = triangle_with_pendant();
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_FALSE(is_kt_maximal(tp, tri, std::nullopt, pendant(), 1));
  const RootedPair cherry(Graph(3, std::vector<Edge>{{0, 2}, {1, 2}}), {0, 1}, {});
  EXPECT_TRUE(is_kt_maximal(tp, tri, std::nullopt, cherry, 2));

  const std::vector<Vertex> small{0};
  EXPECT_THROW(is_kt_maximal(tp, small, std::nullopt, cherry, 2), DomainError);
}

TEST(KtMaximal, CountsFilteredExtensions) {
  // Triangle 0,1,2; pendant path 0 - 3 - 4.
  const Graph g(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}});
  const std::vector<Vertex> a{0};
  EXPECT_EQ(count_kt_maximal_extensions(g, pendant(), a, {}), enumerate_extensions(g, pendant(), a, true).size());
  EXPECT_EQ(enumerate_extensions(g, pendant(), a, true).size(), 3u);
  const std::vector<MaximalityConstraint> constraints{{pendant(), 1}};
  // Only the image 3 can be extended further (by 4).
  EXPECT_EQ(count_kt_maximal_extensions(g, pendant(), a, constraints), 2u);
  EXPECT_EQ(count_kt_maximal_extensions(Graph(3), pendant(), a, constraints), 0u);
}

TEST(CyclicExtensions, Examples) {
  const Graph c4 = cycle_graph(4);
  const Subgraph x = make_subgraph(c4, {0}, {});
  const auto four = enumerate_cyclic_extensions(c4, x, 4);
  ASSERT_GE(four.size(), 1u);
  EXPECT_EQ(four.front().kind, CyclicKind::Type1);
  EXPECT_EQ(four.front().new_vertices.size(), 3u);
  EXPECT_TRUE(enumerate_cyclic_extensions(c4, x, 3).empty());

  const Graph path = path_graph(3);
  const auto ends = enumerate_cyclic_extensions(path, make_subgraph(path, {0, 2}, {}), 2);
  ASSERT_EQ(ends.size(), 1u);
  EXPECT_EQ(ends.front().kind, CyclicKind::Type2);
  EXPECT_EQ(ends.front().new_vertices, (std::vector<Vertex>{1}));

  // t = 0: a host edge between base vertices that the base leaves out.
  const auto bare = enumerate_cyclic_extensions(complete_graph(2), make_subgraph(complete_graph(2), {0, 1}, {}), 2);
  ASSERT_EQ(bare.size(), 1u);
  EXPECT_TRUE(bare.front().new_vertices.empty());

  EXPECT_THROW(enumerate_cyclic_extensions(c4, x, 1), DomainError);
}

TEST(CyclicMaximality, Examples) {
  const Graph c4 = cycle_graph(4);
  const Subgraph whole = whole_graph(c4);
  EXPECT_TRUE(is_cyclically_m_maximal(c4, whole, make_subgraph(c4, {0}, {}), 4));
  const Subgraph x = make_subgraph(c4, {0}, {});
  EXPECT_TRUE(is_cyclically_m_maximal(c4, x, x, 4));

  // Vertex 4 closes a path 1 - 4 - 3 onto the 4-cycle.
  const std::vector<Edge> extra{{1, 4}, {3, 4}};
  const Graph host = with_edges(disjoint_union(c4, Graph(1)), extra);
  const Subgraph cycle = make_subgraph(host, {0, 1, 2, 3}, c4.edges());
  EXPECT_FALSE(is_cyclically_m_maximal(host, cycle, make_subgraph(host, {0}, {}), 4));
}

TEST(ExtPairsProperties, AlphaSafetyAgainstOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const RandomPair rp = random_pair(rng, 6);
    const RootedPair pair(rp.big, rp.roots, rp.small);
    // Without extra root edges every proper S has a new vertex, so the rho^max bound applies.
    bool every_step_has_edges = pair.extra_root_edges().empty();
    const std::size_t n = rp.big.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if ((mask & rp.root_mask) != rp.root_mask || mask == rp.root_mask) continue;
      if (oracle::edges_inside(rp.big, mask) == rp.small.size()) every_step_has_edges = false;
    }
    const Rational densest = max_rel_density(pair).density;
    for (int num = 1; num < 10; ++num) {
      const Alpha alpha(Rational(num, 10));
      const bool safe = is_alpha_safe(pair, alpha);
      EXPECT_EQ(safe, oracle::alpha_safe(rp.big, rp.root_mask, rp.small.size(), alpha.value()));
      if (every_step_has_edges) {
        EXPECT_EQ(safe, alpha.value() < 1 / densest);
      }
    }
  }
}

TEST(ExtPairsProperties, BalanceAndStrictness) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const RandomPair rp = random_pair(rng, 7);
    const RootedPair pair(rp.big, rp.roots, rp.small);
    const bool sb = is_strictly_balanced_pair(pair);
    EXPECT_EQ(sb, is_strictly_balanced_pair_uncapped(pair));
    if (sb) {
      EXPECT_EQ(max_rel_density(pair).density, rel_density(pair));
    }

    // A pattern drawn from the same generator, anchored at random host vertices.
    const Graph host = oracle::random_graph(rng, 6, 0.5);
    std::vector<Vertex> anchor(pair.root_count());
    if (anchor.size() > host.vertex_count()) continue;
    std::vector<Vertex> all(host.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    std::copy_n(all.begin(), anchor.size(), anchor.begin());
    const auto loose = enumerate_extensions(host, pair, anchor, false);
    const auto strict = enumerate_extensions(host, pair, anchor, true);
    const std::set<VertexMap> loose_set(loose.begin(), loose.end());
    for (const auto& m : strict) EXPECT_TRUE(loose_set.count(m));
    bool saturated = true;
    for (Vertex y : pair.new_vertices()) {
      for (Vertex v = 0; v < rp.big.vertex_count(); ++v) {
        if (v != y && !rp.big.adjacent(y, v)) saturated = false;
      }
    }
    if (saturated) {
      EXPECT_EQ(loose.size(), strict.size());
    }
  }
}

TEST(ExtPairsProperties, CyclicExtensionsAddOneCycle) {
  std::mt19937_64 rng(9);
  std::size_t seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph host = oracle::random_graph(rng, 4 + rng() % 5, 0.3);
    std::vector<Vertex> base_vertices;
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
      if (rng() % 3 == 0) base_vertices.push_back(v);
    }
    if (base_vertices.empty()) base_vertices.push_back(0);
    std::vector<Edge> base_edges;
    for (const Edge& e : induced_subgraph(host, base_vertices).edges) {
      if (rng() & 1) base_edges.push_back(e);
    }
    const Subgraph base = make_subgraph(host, base_vertices, base_edges);
    const std::size_t m = 2 + rng() % 4;
    for (const CyclicExtension& ext : enumerate_cyclic_extensions(host, base, m)) {
      const Subgraph grown = apply_extension(base, ext);
      EXPECT_EQ(grown.edges.size() - base.edges.size(), grown.vertices.size() - base.vertices.size() + 1);
      EXPECT_LE(ext.new_vertices.size(), m - 1);
      ++seen;
    }
  }
  EXPECT_GT(seen, 100u);
}
