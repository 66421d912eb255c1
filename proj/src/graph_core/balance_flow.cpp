#include "folab/graph_core/balance_flow.hpp"

#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using Network = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t,
                                                    Traits::edge_descriptor>>>>;

void add_arc(Network& net, std::size_t from, std::size_t to, std::int64_t capacity) {
  auto cap = boost::get(boost::edge_capacity, net);
  auto rev = boost::get(boost::edge_reverse, net);
  auto forward = boost::add_edge(from, to, net).first;
  auto backward = boost::add_edge(to, from, net).first;
  cap[forward] = capacity;
  cap[backward] = 0;
  rev[forward] = backward;
  rev[backward] = forward;
}

}  // namespace

bool strictly_balanced_by_flow(const Graph& g, std::span<const Vertex> fixed,
                               std::size_t fixed_edge_count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> is_fixed(n, 0);
  for (Vertex x : fixed) {
    require_vertex(g, x);
    is_fixed[x] = 1;
  }
  std::vector<Vertex> free_vertices;
  for (Vertex x = 0; x < n; ++x)
    if (!is_fixed[x]) free_vertices.push_back(x);
  const auto free_count = static_cast<std::int64_t>(free_vertices.size());
  if (free_count == 0) throw DomainError("strict balance needs at least one non-fixed vertex");
  if (free_count == 1) return true;

  std::int64_t fixed_fixed = 0;
  for (const Edge& e : g.edges())
    if (is_fixed[e.u] && is_fixed[e.v]) ++fixed_fixed;
  const auto total_rel = static_cast<std::int64_t>(g.edge_count() - fixed_edge_count);
  const std::int64_t extra_fixed = fixed_fixed - static_cast<std::int64_t>(fixed_edge_count);
  const std::int64_t big = total_rel * free_count + free_count * (g.edge_count() + 1) + 1;

  std::vector<std::size_t> node_of(n, 0);
  for (std::size_t i = 0; i < free_vertices.size(); ++i) node_of[free_vertices[i]] = i;

  for (Vertex w : free_vertices) {
    for (Vertex u : free_vertices) {
      if (u == w) continue;
      // Nodes: 0 source, 1 sink, 2.. free vertices, then one node per selectable edge.
      Network net(2 + free_vertices.size());
      const std::size_t source = 0;
      const std::size_t sink = 1;
      std::int64_t gain = 0;
      for (Vertex x : free_vertices)
        if (x != w && x != u) add_arc(net, 2 + node_of[x], sink, total_rel);
      for (const Edge& e : g.edges()) {
        if (is_fixed[e.u] && is_fixed[e.v]) continue;
        if (e.u == u || e.v == u) continue;
        std::vector<std::size_t> needs;
        for (Vertex end : {e.u, e.v})
          if (!is_fixed[end] && end != w) needs.push_back(2 + node_of[end]);
        gain += free_count;
        if (needs.empty()) continue;
        const std::size_t node = boost::add_vertex(net);
        add_arc(net, source, node, free_count);
        for (std::size_t target : needs) add_arc(net, node, target, big);
      }
      const std::int64_t cut = boost::push_relabel_max_flow(net, source, sink);
      const std::int64_t best = gain - cut - total_rel;
      if (best >= -free_count * extra_fixed) return false;
    }
  }
  return true;
}

}  // namespace folab
