#include "folab/rgraph_mc/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "folab/ext_pairs/extensions.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/rgraph_mc/copies.hpp"

namespace folab {

RootedPair Witness::pair() const {
  VertexTuple roots(x.vertex_count());
  for (Vertex i = 0; i < roots.size(); ++i) roots[i] = i;
  return RootedPair(y, std::move(roots), x.edges());
}

Rational theorem1_alpha(int k, int m) {
  if (k < 5 || m < 1) throw DomainError("theorem 1 needs k >= 5 and m >= 1");
  const std::int64_t h = k / 2;
  return Rational(1, h) + Rational(1, h * (m + h - 1));
}

Rational theorem2_alpha(int k, int m) {
  if (k < 8 || m < 2) throw DomainError("theorem 2 needs k >= 8 and m >= 2");
  if (k > 30) throw CapacityError("theorem 2: k too large");
  const std::int64_t len = std::int64_t{1} << (k - 5);
  return Rational(1) - Rational(1, len) + Rational(1, len * m);
}

namespace {

void verify(const Witness& w) {
  const Rational target = 1 / w.alpha;
  if (density(w.x) != target || density(w.y) != target) {
    throw std::logic_error("witness densities differ from 1/alpha");
  }
}

}  // namespace

Witness build_theorem1_witness(int k, int m) {
  const Rational alpha = theorem1_alpha(k, m);
  if (alpha >= 1) throw DomainError("alpha = " + to_string(alpha) + " is not below 1");
  const Vertex h = static_cast<Vertex>(k / 2);
  if (static_cast<Vertex>(m) < h) {
    throw DomainError("m = " + std::to_string(m) + " < floor(k/2) = " + std::to_string(h) +
                      ": no simple graph on " + std::to_string(h + m) + " vertices has density " +
                      to_string(1 / alpha));
  }
  const Vertex mm = static_cast<Vertex>(m);
  auto x_of = [](Vertex i) { return i; };            // x_(i+1)
  auto c_of = [h](Vertex i) { return h + i; };       // c_(i+1)
  auto v_of = [h, mm](Vertex i) { return h + mm + i; };  // v_(i+1)
  const Vertex z = h + mm + (mm + h - 1);

  std::vector<Edge> x_edges;
  for (Vertex i = 0; i < h; ++i)
    for (Vertex j = i + 1; j < h; ++j) x_edges.emplace_back(x_of(i), x_of(j));
  for (Vertex c = 0; c < mm; ++c)
    for (Vertex i = 0; i < h; ++i) x_edges.emplace_back(c_of(c), x_of(i));
  for (Vertex i = 0; i < h; ++i)
    for (Vertex j = i + 1; j < h; ++j) x_edges.emplace_back(c_of(i), c_of(j));

  std::vector<Edge> y_edges = x_edges;
  for (Vertex i = 0; i < mm; ++i) {
    y_edges.emplace_back(v_of(i), c_of(i));
    y_edges.emplace_back(v_of(i), z);
    for (Vertex t = 2; t < h; ++t) y_edges.emplace_back(v_of(i), x_of(t));
  }
  for (Vertex j = 1; j < h; ++j) {
    const Vertex v = v_of(mm + j - 1);
    y_edges.emplace_back(v, z);
    for (Vertex t = 0; t < h; ++t)
      if (t != j) y_edges.emplace_back(v, x_of(t));
  }
  Witness w{Graph(h + mm, x_edges), Graph(z + 1, y_edges), alpha};
  verify(w);
  return w;
}

Witness build_theorem2_witness(int k, int m) {
  const Rational alpha = theorem2_alpha(k, m);
  const Vertex len = Vertex{1} << (k - 5);
  const Vertex half = len / 2;
  const Vertex a = 0;
  const Vertex b = 1;
  Vertex next = 2;
  std::vector<Edge> edges;
  auto add_path = [&](Vertex from, Vertex to, std::vector<Vertex>* interior) {
    Vertex prev = from;
    for (Vertex s = 1; s < len; ++s) {
      const Vertex cur = next++;
      if (interior) interior->push_back(cur);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
    edges.emplace_back(prev, to);
  };
  std::vector<Vertex> midpoints;
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> interior;
    add_path(a, b, &interior);
    midpoints.push_back(interior[half - 1]);
  }
  for (Vertex mid : midpoints) add_path(a, mid, nullptr);
  Graph x(next, edges);
  const Vertex z = next++;
  for (Vertex mid : midpoints) add_path(z, mid, nullptr);
  Witness w{std::move(x), Graph(next, edges), alpha};
  verify(w);
  return w;
}

bool has_unextendable_copy(const Graph& host, const Graph& x, const RootedPair& y_pair) {
  if (y_pair.root_count() != x.vertex_count()) throw DomainError("pair roots do not match X");
  using CopyKey = std::pair<std::vector<Vertex>, std::vector<Edge>>;
  std::map<CopyKey, bool> extendable;
  for_each_embedding(host, x, [&](std::span<const Vertex> image) {
    CopyKey key;
    key.first.assign(image.begin(), image.end());
    std::sort(key.first.begin(), key.first.end());
    for (const Edge& e : x.edges()) key.second.emplace_back(image[e.u], image[e.v]);
    std::sort(key.second.begin(), key.second.end());
    bool& ok = extendable[key];
    if (!ok) {
      VertexTuple anchor(y_pair.root_count());
      for (std::size_t i = 0; i < anchor.size(); ++i) anchor[i] = image[i];
      ok = has_extension(host, y_pair, anchor);
    }
    return true;
  });
  return std::any_of(extendable.begin(), extendable.end(), [](const auto& kv) { return !kv.second; });
}

}  // namespace folab
