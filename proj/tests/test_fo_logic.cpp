#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "folab/ext_pairs/extensions.hpp"
#include "folab/fo_logic/builders.hpp"
#include "folab/fo_logic/evaluator.hpp"
#include "folab/fo_logic/formula.hpp"
#include "folab/fo_logic/parser.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/graph_core/traversal.hpp"
#include "folab/rgraph_mc/copies.hpp"
#include "folab/rgraph_mc/witness.hpp"
#include "oracles.hpp"

using namespace folab;

namespace {

std::size_t ceil_log2(std::size_t i) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < i) ++d;
  return d;
}

// Random formula over the given variables; quantifiers introduce fresh names.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  Formula make(std::size_t budget, std::vector<std::string> scope) {
    nodes_left_ = 40;
    return grow(budget, std::move(scope));
  }

 private:
  Formula grow(std::size_t budget, std::vector<std::string> scope) {
    const bool leaf = budget == 0 || nodes_left_ == 0;
    if (nodes_left_ > 0) --nodes_left_;
    const std::size_t choice = rng_() % (leaf ? 2 : 7);
    if (scope.empty()) {
      const std::string v = "v" + std::to_string(counter_++);
      scope.push_back(v);
      return (rng_() & 1) ? exists(v, grow(budget == 0 ? 0 : budget - 1, scope))
                          : forall(v, grow(budget == 0 ? 0 : budget - 1, scope));
    }
    auto pick = [&] { return scope[rng_() % scope.size()]; };
    switch (choice) {
      case 0: {
        std::string a = pick();
        std::string b = pick();
        if (a == b) return eq(a, b);
        return adj(a, b);
      }
      case 1:
        return eq(pick(), pick());
      case 2:
        return neg(grow(budget, scope));
      case 3:
      case 4: {
        std::vector<Formula> parts;
        const std::size_t count = 2 + rng_() % 2;
        for (std::size_t i = 0; i < count; ++i) parts.push_back(grow(budget, scope));
        return choice == 3 ? conj(std::move(parts)) : disj(std::move(parts));
      }
      case 5:
        return implies(grow(budget, scope), grow(budget, scope));
      default: {
        const std::string v = "v" + std::to_string(counter_++);
        scope.push_back(v);
        Formula body = grow(budget - 1, scope);
        return (rng_() & 1) ? exists(v, body) : forall(v, body);
      }
    }
  }

  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
  std::size_t nodes_left_ = 0;
};

RootedPair pendant_edge_pair() {
  const std::vector<Edge> e{{0, 1}};
  return RootedPair(Graph(2, e), {0}, {});
}

}  // namespace

TEST(Parser, Examples) {
  const Formula f = parse_formula("E x . E y . adj(x,y)");
  EXPECT_TRUE(structurally_equal(f, exists("x", exists("y", adj("x", "y")))));
  EXPECT_TRUE(structurally_equal(parse_formula("A x . x = x"), forall("x", eq("x", "x"))));
  try {
    parse_formula("adj(x,y", {"x", "y"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_formula("adj(x,y)"), ParseError);
  EXPECT_NO_THROW(parse_formula("adj(x,y)", {"x", "y"}));
  EXPECT_TRUE(structurally_equal(parse_formula("(adj(x,y) -> !x=y)", {"x", "y"}),
                                 implies(adj("x", "y"), neg(eq("x", "y")))));
}

TEST(Parser, RoundTripsRandomFormulas) {
  FormulaGenerator gen(17);
  std::size_t deep = 0;
  for (int i = 0; i < 1200; ++i) {
    const Formula f = gen.make(1 + i % 5, {"x", "y"});
    ASSERT_LE(depth(f), 5u);
    if (depth(f) >= 4) ++deep;
    const std::string text = to_string(f);
    const Formula back = parse_formula(text, {"x", "y"});
    EXPECT_TRUE(structurally_equal(f, back)) << text;
    EXPECT_EQ(to_string(back), text);
  }
  EXPECT_GT(deep, 100u);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(adj("x", "y")), 0u);
  EXPECT_EQ(depth(conj({exists("x", eq("x", "x")), forall("y", forall("z", eq("y", "z")))})), 2u);
  for (std::size_t i = 1; i <= 64; ++i) {
    EXPECT_EQ(depth(dist_formula(i)), ceil_log2(i)) << i;
    EXPECT_EQ(depth(dist_exact_formula(i)), ceil_log2(i)) << i;
  }
}

TEST(Evaluate, Examples) {
  const Formula some_edge = parse_formula("E x . E y . adj(x,y)");
  EXPECT_TRUE(evaluate(complete_graph(3), some_edge));
  EXPECT_FALSE(evaluate(Graph(4), some_edge));
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(evaluate(c5, dist_exact_formula(2), {{"x", 0}, {"y", 2}}));
  EXPECT_TRUE(evaluate(c5, dist_exact_formula(1), {{"x", 0}, {"y", 1}}));
  EXPECT_FALSE(evaluate(c5, dist_exact_formula(1), {{"x", 0}, {"y", 2}}));
  EXPECT_TRUE(evaluate(c5, dist_formula(0), {{"x", 3}, {"y", 3}}));
  EXPECT_THROW(evaluate(c5, adj("x", "y"), {{"x", 0}}), DomainError);
}

// D_i against exact walk lengths, D*_i against BFS distance, x != y.
TEST(DistanceFormulas, AgreeWithOracles) {
  std::vector<CompiledFormula> walk_f;
  std::vector<CompiledFormula> exact_f;
  for (std::size_t i = 0; i <= 8; ++i) {
    walk_f.emplace_back(dist_formula(i));
    exact_f.emplace_back(dist_exact_formula(i));
  }
  std::mt19937_64 rng(23);
  std::size_t checks = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.15 * (trial % 4));
    const auto w = oracle::walks(g, 8);
    const auto d = oracle::all_distances(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const Assignment sigma{{"x", x}, {"y", y}};
        for (std::size_t i = 0; i <= 8; ++i) {
          EXPECT_EQ(evaluate(g, walk_f[i], sigma), w[i][x][y]);
          if (x != y && i >= 1) {
            EXPECT_EQ(evaluate(g, exact_f[i], sigma), d[x][y] == i);
            ++checks;
          }
        }
      }
    }
  }
  EXPECT_GE(checks, 2000u);
}

TEST(Cliques, Examples) {
  EXPECT_TRUE(evaluate(complete_graph(4), clique_formula({"a", "b", "c", "d"}),
                       {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}}));
  const Formula triangle = exists("a", exists("b", exists("c", clique_formula({"a", "b", "c"}))));
  EXPECT_TRUE(evaluate(complete_graph(3), triangle));
  EXPECT_FALSE(evaluate(cycle_graph(4), triangle));
  EXPECT_TRUE(structurally_equal(clique_formula({"x", "y"}), adj("x", "y")));
  EXPECT_THROW(clique_formula({"x"}), DomainError);

  const Graph star = star_graph(3);
  EXPECT_TRUE(evaluate(star, common_neighbor_formula("y", {"a", "b", "c"}),
                       {{"y", 0}, {"a", 1}, {"b", 2}, {"c", 3}}));
  EXPECT_FALSE(evaluate(star, common_neighbor_formula("y", {"a", "b"}), {{"y", 1}, {"a", 2}, {"b", 3}}));
  EXPECT_TRUE(structurally_equal(common_neighbor_formula("y", {"x"}), adj("y", "x")));
  EXPECT_THROW(common_neighbor_formula("y", {}), DomainError);
}

TEST(TheoremSentences, DepthAndRange) {
  for (int k = 5; k <= 9; ++k) {
    const std::size_t h = static_cast<std::size_t>(k / 2);
    const Formula f = theorem1_sentence(k);
    EXPECT_EQ(depth(f), std::max(2 * h, h + 3)) << k;
    EXPECT_TRUE(is_closed(f));
  }
  EXPECT_EQ(depth(theorem1_sentence(5)), 5u);
  EXPECT_EQ(depth(theorem1_sentence(8)), 8u);
  EXPECT_THROW(theorem1_sentence(4), DomainError);
  for (int k = 8; k <= 9; ++k) {
    const Formula f = theorem2_sentence(k);
    EXPECT_EQ(depth(f), static_cast<std::size_t>(k));
    EXPECT_TRUE(is_closed(f));
  }
  EXPECT_THROW(theorem2_sentence(7), DomainError);
}

TEST(TheoremSentences, FirstOnWitnesses) {
  for (const auto& [k, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}}) {
    const Witness w = build_theorem1_witness(k, m);
    const RootedPair pair = w.pair();
    const Formula f = theorem1_sentence(k);
    // X alone and X beside a triangle-free graph: every copy of X is unextendable.
    for (const Graph& host : {w.x, disjoint_union(w.x, cycle_graph(5))}) {
      EXPECT_TRUE(has_unextendable_copy(host, w.x, pair));
      EXPECT_TRUE(evaluate(host, f));
    }
  }
  EXPECT_FALSE(evaluate(cycle_graph(5), theorem1_sentence(5)));
  EXPECT_FALSE(evaluate(Graph(6), theorem1_sentence(5)));
}

// Built as written; the inner existential over x makes S(a,b) fail on the witness.
TEST(TheoremSentences, SecondOnWitnessAsWritten) {
  const Witness w = build_theorem2_witness(8, 2);
  EXPECT_FALSE(evaluate(w.x, theorem2_sentence(8)));
  EXPECT_FALSE(evaluate(path_graph(9), theorem2_sentence(8)));
}

TEST(SubgraphSentence, Examples) {
  const Formula k3 = subgraph_sentence(complete_graph(3));
  EXPECT_TRUE(evaluate(complete_graph(4), k3));
  EXPECT_FALSE(evaluate(cycle_graph(4), k3));
  EXPECT_EQ(depth(k3), 3u);
  EXPECT_THROW(subgraph_sentence(Graph(9)), CapacityError);
}

TEST(ExtensionSentence, Examples) {
  const Formula f = extension_sentence(pendant_edge_pair());
  EXPECT_TRUE(evaluate(complete_graph(3), f));
  EXPECT_TRUE(evaluate(path_graph(3), f));
  EXPECT_FALSE(evaluate(disjoint_union(complete_graph(2), Graph(1)), f));
}

TEST(SubgraphSentence, AgreesWithCopyCount) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = oracle::random_graph(rng, 1 + rng() % 7, 0.45);
    const Graph pattern = oracle::random_graph(rng, 1 + rng() % 4, 0.6);
    EXPECT_EQ(evaluate(host, subgraph_sentence(pattern)), count_copies(host, pattern) > 0);
  }
}

TEST(ExtensionSentence, AgreesWithExtensionCounts) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t pattern_v = 2 + rng() % 3;
    const std::size_t root_count = 1 + rng() % std::min<std::size_t>(2, pattern_v - 1);
    VertexTuple roots(root_count);
    for (std::size_t i = 0; i < root_count; ++i) roots[i] = static_cast<Vertex>(i);
    const RootedPair pair = induced_pair(oracle::random_graph(rng, pattern_v, 0.6), roots);
    const Graph host = oracle::random_graph(rng, 1 + rng() % 6, 0.5);

    bool every_tuple = true;
    std::vector<Vertex> anchor(root_count);
    for (Vertex a = 0; a < host.vertex_count(); ++a) {
      for (Vertex b = 0; b < host.vertex_count(); ++b) {
        if (root_count == 1 && b > 0) break;
        if (root_count == 2 && a == b) continue;
        anchor[0] = a;
        if (root_count == 2) anchor[1] = b;
        if (enumerate_extensions(host, pair, anchor, false).empty()) every_tuple = false;
      }
    }
    EXPECT_EQ(evaluate(host, extension_sentence(pair)), every_tuple);
  }
}

TEST(Evaluate, InvariantUnderRelabeling) {
  FormulaGenerator gen(41);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f = gen.make(1 + trial % 4, {});
    ASSERT_TRUE(is_closed(f));
    const Graph g = oracle::random_graph(rng, 1 + rng() % 6, 0.5);
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(evaluate(g, f), evaluate(relabel(g, perm), f)) << to_string(f);
  }
}
