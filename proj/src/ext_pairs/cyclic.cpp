#include "folab/ext_pairs/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

// Depth-first walk over simple paths of new vertices hanging off each base vertex.
// report returns false to stop the whole search.
class CyclicSearch {
 public:
  using Report = std::function<bool(CyclicExtension&&)>;

  CyclicSearch(const Graph& host, const Subgraph& base, std::size_t m, bool type2_only,
               Report report)
      : host_(host), base_(base), m_(m), type2_only_(type2_only), report_(std::move(report)),
        in_base_(host.vertex_count(), 0), on_path_(host.vertex_count(), 0) {
    for (Vertex x : base.vertices) in_base_[x] = 1;
  }

  bool run() {
    for (Vertex x1 : base_.vertices) {
      // Type2 with t = 0.
      for (Vertex x2 : host_.neighbors(x1)) {
        if (x2 > x1 && in_base_[x2] && !base_.contains(Edge(x1, x2))) {
          if (!emit(CyclicKind::Type2, {x1, x2}, {}, {Edge(x1, x2)})) return false;
        }
      }
      path_.clear();
      if (!grow(x1)) return false;
    }
    return true;
  }

 private:
  bool grow(Vertex x1) {
    const Vertex tip = path_.empty() ? x1 : path_.back();
    const std::size_t len = path_.size();
    if (len >= 1) {
      // Type2: close on another base vertex.
      for (Vertex x2 : host_.neighbors(tip)) {
        if (in_base_[x2] && x2 != x1 && x1 < x2) {
          if (!emit_path(CyclicKind::Type2, x1, x2)) return false;
        }
      }
      // Type1: close on x1 (t1 = 0) or on an earlier path vertex w_j, j <= len - 2,
      // leaving a cycle of len - j >= 2 new vertices beyond the tail.
      if (!type2_only_) {
        if (len >= 2 && host_.adjacent(tip, x1)) {
          if (!emit_cycle(x1, 0)) return false;
        }
        for (std::size_t j = 1; j + 2 <= len; ++j) {
          if (host_.adjacent(tip, path_[j - 1])) {
            if (!emit_cycle(x1, j)) return false;
          }
        }
      }
    }
    if (len + 1 > m_ - 1) return true;
    for (Vertex y : host_.neighbors(tip)) {
      if (in_base_[y] || on_path_[y]) continue;
      on_path_[y] = 1;
      path_.push_back(y);
      const bool go_on = grow(x1);
      path_.pop_back();
      on_path_[y] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  bool emit_path(CyclicKind kind, Vertex x1, Vertex x2) {
    std::vector<Edge> edges;
    Vertex prev = x1;
    for (Vertex y : path_) {
      edges.emplace_back(prev, y);
      prev = y;
    }
    edges.emplace_back(prev, x2);
    return emit(kind, {x1, x2}, path_, std::move(edges));
  }

  // Closing edge from the path tip back to path_[tail - 1] (x1 when tail = 0).
  bool emit_cycle(Vertex x1, std::size_t tail) {
    std::vector<Edge> edges;
    Vertex prev = x1;
    for (Vertex y : path_) {
      edges.emplace_back(prev, y);
      prev = y;
    }
    edges.emplace_back(path_.back(), tail == 0 ? x1 : path_[tail - 1]);
    return emit(CyclicKind::Type1, {x1}, path_, std::move(edges));
  }

  bool emit(CyclicKind kind, std::vector<Vertex> anchors, std::vector<Vertex> vertices,
            std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    return report_(CyclicExtension{kind, std::move(anchors), std::move(vertices), std::move(edges)});
  }

  const Graph& host_;
  const Subgraph& base_;
  std::size_t m_;
  bool type2_only_;
  Report report_;
  std::vector<std::uint8_t> in_base_;
  std::vector<std::uint8_t> on_path_;
  std::vector<Vertex> path_;
};

void require_m(std::size_t m) {
  if (m < 2) throw DomainError("cyclic extensions need m >= 2");
}

void require_base(const Graph& host, const Subgraph& base) {
  for (Vertex x : base.vertices) require_vertex(host, x);
  for (const Edge& e : base.edges) {
    if (!host.adjacent(e.u, e.v) || !base.contains(e.u) || !base.contains(e.v)) {
      throw DomainError("base edge is not a host edge between base vertices");
    }
  }
}

}  // namespace

std::vector<CyclicExtension> enumerate_cyclic_extensions(const Graph& host, const Subgraph& base,
                                                         std::size_t m) {
  require_m(m);
  require_base(host, base);
  std::set<std::pair<std::vector<Vertex>, std::vector<Edge>>> seen;
  std::vector<CyclicExtension> out;
  CyclicSearch(host, base, m, false, [&](CyclicExtension&& ext) {
    if (seen.emplace(ext.new_vertices, ext.new_edges).second) out.push_back(std::move(ext));
    return true;
  }).run();
  return out;
}

bool has_cyclic_extension(const Graph& host, const Subgraph& base, std::size_t m) {
  require_m(m);
  require_base(host, base);
  return !CyclicSearch(host, base, m, false, [](CyclicExtension&&) { return false; }).run();
}

bool has_type2_extension(const Graph& host, const Subgraph& base, std::size_t m) {
  require_m(m);
  require_base(host, base);
  return !CyclicSearch(host, base, m, true, [](CyclicExtension&&) { return false; }).run();
}

Subgraph apply_extension(const Subgraph& base, const CyclicExtension& ext) {
  return subgraph_union(base, Subgraph{ext.new_vertices, ext.new_edges});
}

bool is_cyclically_m_maximal(const Graph& host, const Subgraph& g_sub, const Subgraph& h_sub,
                             std::size_t m) {
  const auto of_g = enumerate_cyclic_extensions(host, g_sub, m);
  const auto of_h = enumerate_cyclic_extensions(host, h_sub, m);
  std::set<std::pair<std::vector<Vertex>, std::vector<Edge>>> known;
  for (const auto& ext : of_h) known.emplace(ext.new_vertices, ext.new_edges);
  return std::all_of(of_g.begin(), of_g.end(), [&](const CyclicExtension& ext) {
    return known.contains({ext.new_vertices, ext.new_edges});
  });
}

}  // namespace folab
