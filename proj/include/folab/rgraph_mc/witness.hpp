#pragma once

#include "folab/ext_pairs/rooted_pair.hpp"
#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"

namespace folab {

// X occupies vertices 0..v(X)-1 of Y and is induced there.
struct Witness {
  Graph x;
  Graph y;
  Rational alpha;

  // (Y, X) rooted at X's vertices in label order.
  RootedPair pair() const;
};

// 1/h + 1/(h(m+h-1)), h = floor(k/2).
Rational theorem1_alpha(int k, int m);
// 1 - 1/L + 1/(L m), L = 2^(k-5).
Rational theorem2_alpha(int k, int m);

// X: an h-clique x_1..x_h with m common neighbours c_1..c_m, c_1..c_h a clique.
// Y adds v_1..v_(m+h-1) and z: v_i ~ c_i, z, x_3..x_h for i <= m, and
// v_(m+j) ~ z and every x except x_(j+1). Needs k >= 5, alpha < 1 and m >= h: for
// m < h no simple graph on h+m vertices reaches density h(m+h-1)/(m+h).
Witness build_theorem1_witness(int k, int m);

// X: m paths of length L between a and b, plus for each path midpoint a further
// path of length L from a, all internally disjoint. Y adds z joined to every
// midpoint by a new path of length L. Needs k >= 8, m >= 2.
Witness build_theorem2_witness(int k, int m);

// Root i of y_pair stands for vertex i of x. True iff some copy of x in host admits
// no extension by y_pair under any of its labelings.
bool has_unextendable_copy(const Graph& host, const Graph& x, const RootedPair& y_pair);

}  // namespace folab
