#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "folab/ext_pairs/rooted_pair.hpp"
#include "folab/fo_logic/formula.hpp"
#include "folab/graph_core/graph.hpp"

namespace folab {

// Builds distance formulas with fresh bound variables (q1, q2, ...) and reuses each
// D_i(x,y) / D*_i(x,y) node, so large sentences stay small as DAGs.
class FormulaBuilder {
 public:
  // D_0 = (x = y), D_1 = adj(x,y), D_i = E v . (D_floor(i/2)(x,v) & D_ceil(i/2)(y,v)).
  // True iff a walk of length exactly i joins x and y.
  Formula dist(std::size_t i, const std::string& x, const std::string& y);
  // D*_i = D_i & !(D_1 | ... | D_(i-1)); D*_0 = (x = y), D*_1 = D_1.
  // For x != y this holds iff d(x,y) = i.
  Formula dist_exact(std::size_t i, const std::string& x, const std::string& y);
  // D*_i(x,z) & D*_j(z,y).
  Formula dist_exact_via(std::size_t i, std::size_t j, const std::string& x, const std::string& y,
                         const std::string& z);
  std::string fresh();

 private:
  std::size_t counter_ = 0;
  std::map<std::tuple<bool, std::size_t, std::string, std::string>, Formula> cache_;
};

Formula dist_formula(std::size_t i, const std::string& x = "x", const std::string& y = "y");
Formula dist_exact_formula(std::size_t i, const std::string& x = "x", const std::string& y = "y");

// Pairwise adjacency of all listed variables; at least two.
Formula clique_formula(const std::vector<std::string>& vars);
// y adjacent to every entry of xs; xs nonempty.
Formula common_neighbor_formula(const std::string& y, const std::vector<std::string>& xs);

// Closed sentence of depth max(2h, h + 3), h = floor(k/2), k >= 5: some h-clique has
// h common neighbors forming a clique, and no vertex z closes the structure.
Formula theorem1_sentence(int k);
// Closed sentence of depth k, k >= 8, over path lengths 2^(k-5), 2^(k-6), 2^(k-7).
Formula theorem2_sentence(int k);

inline constexpr std::size_t kSentencePatternCap = 8;

// Some distinct vertices carry all edges of g.
Formula subgraph_sentence(const Graph& g, std::size_t cap = kSentencePatternCap);
// Every tuple of distinct vertices has a (non-strict) extension by the pair.
Formula extension_sentence(const RootedPair& pair, std::size_t cap = kSentencePatternCap);

}  // namespace folab
