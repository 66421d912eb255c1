#include "folab/ef_game/chain.hpp"

#include <algorithm>

#include "folab/ext_pairs/cyclic.hpp"
#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

// The host with the vertices and edges of `removed` outside `kept` deleted; vertex
// numbering is kept and the deleted vertices stay isolated.
Graph without(const Graph& host, const Subgraph& removed, const Subgraph& kept) {
  std::vector<std::uint8_t> gone(host.vertex_count(), 0);
  for (Vertex v : removed.vertices) {
    if (!kept.contains(v)) gone[v] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : host.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    if (removed.contains(e) && !kept.contains(e)) continue;
    edges.push_back(e);
  }
  return Graph(host.vertex_count(), edges);
}

std::optional<CyclicExtension> shortest_extension(const Graph& host, const Subgraph& base,
                                                  std::size_t m) {
  auto all = enumerate_cyclic_extensions(host, base, m);
  if (all.empty()) return std::nullopt;
  return *std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.new_vertices.size() < b.new_vertices.size();
  });
}

bool is_extension_step(const Graph& host, const Subgraph& from, const Subgraph& to, std::size_t m) {
  for (const auto& ext : enumerate_cyclic_extensions(host, from, m)) {
    if (apply_extension(from, ext) == to) return true;
  }
  return false;
}

class ChainBuilder {
 public:
  ChainBuilder(const Graph& host, Vertex x, std::size_t k, std::size_t b)
      : host_(host), m_(std::size_t{1} << (k - 1)),
        limit_(k - 1 >= 40 ? std::size_t{1} << 40 : (std::size_t{1} << (k - 1)) * b + 1) {
    chain_.graphs.push_back(make_subgraph(host, {x}, {}));
  }

  ExtensionChain build() {
    extend_in(host_);
    if (auto first = first_long_step()) repair(*first);
    finish();
    return std::move(chain_);
  }

 private:
  bool is_long(const Subgraph& from, const Subgraph& to) const {
    return to.vertices.size() - from.vertices.size() > m_ - 2;
  }

  std::optional<std::size_t> first_long_step() const {
    for (std::size_t i = 1; i < chain_.graphs.size(); ++i) {
      if (is_long(chain_.graphs[i - 1], chain_.graphs[i])) return i;
    }
    return std::nullopt;
  }

  // Appends extensions found in `in` until none remain or the guard trips.
  void extend_in(const Graph& in) {
    while (!chain_.guard_exceeded) {
      auto ext = shortest_extension(in, chain_.graphs.back(), m_);
      if (!ext) return;
      if (chain_.length() + 1 > limit_) {
        chain_.guard_exceeded = true;
        return;
      }
      chain_.graphs.push_back(apply_extension(chain_.graphs.back(), *ext));
    }
  }

  void repair(std::size_t i) {
    const Subgraph prev = chain_.graphs[i - 1];
    const Subgraph step = chain_.graphs[i];
    const Graph reduced = without(host_, step, prev);
    if (!has_cyclic_extension(reduced, prev, m_)) return;
    chain_.rebuilt = true;
    chain_.graphs.resize(i);
    extend_in(reduced);
    if (chain_.guard_exceeded) return;
    chain_.graphs.push_back(subgraph_union(chain_.graphs.back(), step));
    extend_in(host_);
  }

  void finish() {
    auto& g = chain_.graphs;
    for (std::size_t i = 1; i < g.size(); ++i) {
      chain_.step_edges.push_back(g[i].edges.size() - g[i - 1].edges.size());
      if (!is_extension_step(host_, g[i - 1], g[i], m_)) chain_.steps_valid = false;
      if (is_long(g[i - 1], g[i])) {
        chain_.long_steps.push_back(i);
        if (!chain_.mu) {
          const Graph reduced = without(host_, g[i], g[i - 1]);
          if (!has_cyclic_extension(reduced, g[i - 1], m_)) chain_.mu = i - 1;
        }
      }
    }
    if (chain_.length() == 0) {
      chain_.closure_density = Rational(0);
      return;
    }
    const Subgraph closure = induced_subgraph(host_, g.back().vertices);
    chain_.induced_closure = closure.edges.size() == g.back().edges.size();
    chain_.closure_density = Rational(static_cast<std::int64_t>(closure.edges.size()),
                                      static_cast<std::int64_t>(closure.vertices.size()));
  }

  const Graph& host_;
  std::size_t m_;
  std::size_t limit_;
  ExtensionChain chain_;
};

}  // namespace

ExtensionChain build_extension_chain(const Graph& host, Vertex x, std::size_t k, std::size_t b) {
  if (k < 2) throw DomainError("build_extension_chain: need k >= 2");
  if (k > 40) throw DomainError("build_extension_chain: need k <= 40");
  if (b == 0) throw DomainError("build_extension_chain: need b >= 1");
  require_vertex(host, x);
  return ChainBuilder(host, x, k, b).build();
}

}  // namespace folab
