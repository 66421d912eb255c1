#include "folab/ext_pairs/extensions.hpp"

#include <algorithm>
#include <string>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

class ExtensionSearch {
 public:
  ExtensionSearch(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor,
                  const ExtensionQuery& query,
                  const std::function<bool(std::span<const Vertex>)>& visit)
      : host_(host), pattern_(pattern), query_(query), visit_(visit),
        image_(pattern.big().vertex_count(), 0), placed_(pattern.big().vertex_count(), 0),
        used_(host.vertex_count(), 0) {
    const auto& roots = pattern.roots();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      image_[roots[i]] = anchor[i];
      placed_[roots[i]] = 1;
      used_[anchor[i]] = 1;
    }
    order_new_vertices();
  }

  // False iff visit asked to stop.
  bool run() {
    for (const Edge& e : pattern_.extra_root_edges()) {
      if (!host_.adjacent(image_[e.u], image_[e.v])) return true;
    }
    return extend(0);
  }

 private:
  // Place new vertices adjacent to already placed ones first so candidate lists come
  // from host neighborhoods.
  void order_new_vertices() {
    const Graph& p = pattern_.big();
    std::vector<std::uint8_t> seen = placed_;
    std::vector<Vertex> pending = pattern_.new_vertices();
    while (!pending.empty()) {
      auto best = pending.begin();
      std::size_t best_links = 0;
      for (auto it = pending.begin(); it != pending.end(); ++it) {
        std::size_t links = 0;
        for (Vertex y : p.neighbors(*it)) links += seen[y];
        if (links > best_links) {
          best = it;
          best_links = links;
        }
      }
      seen[*best] = 1;
      order_.push_back(*best);
      pending.erase(best);
    }
  }

  bool fits(Vertex x, Vertex candidate) const {
    if (used_[candidate]) return false;
    if (query_.admissible && !query_.admissible(candidate)) return false;
    const Graph& p = pattern_.big();
    for (Vertex y = 0; y < p.vertex_count(); ++y) {
      if (!placed_[y]) continue;
      const bool want = p.adjacent(x, y);
      const bool have = host_.adjacent(candidate, image_[y]);
      if (want && !have) return false;
      if (query_.strict && !want && have) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    const Vertex x = order_[depth];
    const Graph& p = pattern_.big();
    std::optional<Vertex> pivot;
    for (Vertex y : p.neighbors(x)) {
      if (placed_[y]) {
        pivot = image_[y];
        break;
      }
    }
    auto attempt = [&](Vertex c) {
      if (!fits(x, c)) return true;
      image_[x] = c;
      placed_[x] = used_[c] = 1;
      const bool go_on = extend(depth + 1);
      placed_[x] = used_[c] = 0;
      return go_on;
    };
    if (pivot) {
      for (Vertex c : host_.neighbors(*pivot))
        if (!attempt(c)) return false;
    } else {
      for (Vertex c = 0; c < host_.vertex_count(); ++c)
        if (!attempt(c)) return false;
    }
    return true;
  }

  const Graph& host_;
  const RootedPair& pattern_;
  const ExtensionQuery& query_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<Vertex> image_;
  std::vector<std::uint8_t> placed_;
  std::vector<std::uint8_t> used_;
  std::vector<Vertex> order_;
};

void require_anchor(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor) {
  if (anchor.size() != pattern.root_count()) {
    throw DomainError("anchor has " + std::to_string(anchor.size()) + " vertices but the pattern has " +
                      std::to_string(pattern.root_count()) + " roots");
  }
  require_tuple(host, anchor);
}

}  // namespace

bool for_each_extension(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor,
                        const ExtensionQuery& query,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
  require_anchor(host, pattern, anchor);
  return ExtensionSearch(host, pattern, anchor, query, visit).run();
}

std::vector<VertexMap> enumerate_extensions(const Graph& host, const RootedPair& pattern,
                                            std::span<const Vertex> anchor, bool strict) {
  std::vector<VertexMap> out;
  ExtensionQuery query{strict, {}};
  for_each_extension(host, pattern, anchor, query, [&](std::span<const Vertex> image) {
    out.emplace_back(image.begin(), image.end());
    return true;
  });
  return out;
}

bool has_extension(const Graph& host, const RootedPair& pattern, std::span<const Vertex> anchor,
                   const ExtensionQuery& query) {
  return !for_each_extension(host, pattern, anchor, query,
                             [](std::span<const Vertex>) { return false; });
}

namespace {

// Visits ordered tuples of t_size distinct entries of pool; stops when visit returns false.
bool for_each_tuple(std::span<const Vertex> pool, std::size_t t_size, std::vector<Vertex>& tuple,
                    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (tuple.size() == t_size) return visit(tuple);
  for (Vertex x : pool) {
    if (std::find(tuple.begin(), tuple.end(), x) != tuple.end()) continue;
    tuple.push_back(x);
    const bool go_on = for_each_tuple(pool, t_size, tuple, visit);
    tuple.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool is_kt_maximal(const Graph& host, std::span<const Vertex> gt,
                   std::optional<std::span<const Vertex>> ht, const RootedPair& k_pattern,
                   std::size_t t_size) {
  if (t_size != k_pattern.root_count()) throw DomainError("t_size must equal the root count of K");
  if (t_size > gt.size()) throw DomainError("t_size exceeds the size of the tested vertex set");
  if (k_pattern.new_vertices().empty()) throw DomainError("K must have at least one new vertex");
  require_tuple(host, gt);
  std::vector<std::uint8_t> in_gt(host.vertex_count(), 0);
  std::vector<std::uint8_t> in_ht(host.vertex_count(), 0);
  for (Vertex x : gt) in_gt[x] = 1;
  if (ht) {
    for (Vertex x : *ht) {
      require_vertex(host, x);
      if (!in_gt[x]) throw DomainError("H-side vertex outside the G-side set");
      in_ht[x] = 1;
    }
  }
  // gt_links[c] = number of gt vertices adjacent to c
  std::vector<std::size_t> gt_links(host.vertex_count(), 0);
  for (Vertex x : gt)
    for (Vertex y : host.neighbors(x)) ++gt_links[y];

  std::vector<Vertex> tuple;
  const bool maximal = for_each_tuple(gt, t_size, tuple, [&](const std::vector<Vertex>& t) {
    if (ht && std::none_of(t.begin(), t.end(), [&](Vertex x) { return !in_ht[x]; })) return true;
    ExtensionQuery query;
    query.strict = true;
    query.admissible = [&](Vertex c) {
      if (in_gt[c]) return false;
      std::size_t links_in_t = 0;
      for (Vertex x : t) links_in_t += host.adjacent(c, x);
      return gt_links[c] == links_in_t;
    };
    return !has_extension(host, k_pattern, t, query);
  });
  return maximal;
}

std::size_t count_kt_maximal_extensions(const Graph& host, const RootedPair& pattern,
                                        std::span<const Vertex> anchor,
                                        std::span<const MaximalityConstraint> constraints) {
  std::size_t count = 0;
  ExtensionQuery query{true, {}};
  for_each_extension(host, pattern, anchor, query, [&](std::span<const Vertex> image) {
    const std::vector<Vertex> gt(image.begin(), image.end());
    const bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
      return is_kt_maximal(host, gt, std::optional<std::span<const Vertex>>(anchor), c.pattern,
                           c.t_size);
    });
    count += ok;
    return true;
  });
  return count;
}

}  // namespace folab
