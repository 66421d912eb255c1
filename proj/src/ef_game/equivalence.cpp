#include "folab/ef_game/equivalence.hpp"

#include <algorithm>

#include "folab/ext_pairs/cyclic.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/subgraph.hpp"
#include "folab/graph_core/traversal.hpp"

namespace folab {

namespace {

std::size_t pow2(std::size_t e) {
  return e >= 63 ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << e);
}

// Tuple index per vertex, -1 outside every tuple. Validates shape and disjointness.
std::vector<int> tuple_index(const Graph& host, const VertexSets& tuples, std::size_t l,
                             const char* what) {
  if (tuples.size() != l) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(l) + " tuples");
  }
  std::vector<int> index(host.vertex_count(), -1);
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    if (tuples[j].empty()) throw DomainError(std::string(what) + ": empty tuple");
    for (Vertex v : tuples[j]) {
      require_vertex(host, v);
      if (index[v] >= 0) throw DomainError(std::string(what) + ": tuples overlap");
      index[v] = static_cast<int>(j);
    }
  }
  return index;
}

void check_level(const EquivalenceLevel& level, std::size_t l) {
  if (l < 1 || l > level.r || level.r > level.k) {
    throw DomainError("equivalence: need 1 <= l <= r <= k");
  }
}

class TupleMatcher {
 public:
  TupleMatcher(const Graph& x, const Graph& y, const VertexSets& tx, const VertexSets& ty,
               std::span<const PickPair> picks)
      : x_(x), y_(y), tx_(tx), ty_(ty), picks_(picks),
        map_(x.vertex_count(), kUnmapped), used_(y.vertex_count(), 0) {}

  std::optional<PartialMap> run(const PartialMap* hint) {
    ix_ = tuple_index(x_, tx_, tx_.size(), "tuples_x");
    iy_ = tuple_index(y_, ty_, tx_.size(), "tuples_y");
    for (std::size_t j = 0; j < tx_.size(); ++j) {
      if (tx_[j].size() != ty_[j].size()) return std::nullopt;
    }
    if (hint && valid(*hint)) return *hint;
    for (const PickPair& p : picks_) {
      if (p.g >= x_.vertex_count() || p.h >= y_.vertex_count()) return std::nullopt;
      if (ix_[p.g] < 0 || ix_[p.g] != iy_[p.h]) return std::nullopt;
      if (map_[p.g] == kUnmapped) {
        if (used_[p.h]) return std::nullopt;
        map_[p.g] = p.h;
        used_[p.h] = 1;
      } else if (map_[p.g] != p.h) {
        return std::nullopt;
      }
    }
    for (const PickPair& p : picks_) {
      if (!consistent(p.g, p.h)) return std::nullopt;
    }
    build_order();
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool valid(const PartialMap& m) const {
    if (m.size() != x_.vertex_count()) return false;
    std::vector<std::uint8_t> hit(y_.vertex_count(), 0);
    for (std::size_t j = 0; j < tx_.size(); ++j) {
      for (Vertex a : tx_[j]) {
        const Vertex b = m[a];
        if (b == kUnmapped || b >= y_.vertex_count() || iy_[b] != static_cast<int>(j) || hit[b]) {
          return false;
        }
        hit[b] = 1;
        for (Vertex c : tx_[j]) {
          if (c != a && x_.adjacent(a, c) != y_.adjacent(b, m[c])) return false;
        }
      }
    }
    for (const PickPair& p : picks_) {
      if (p.g >= m.size() || m[p.g] != p.h) return false;
    }
    return true;
  }

  // Adjacency to already mapped vertices of the same tuple agrees.
  bool consistent(Vertex a, Vertex b) const {
    const auto j = static_cast<std::size_t>(ix_[a]);
    for (Vertex c : tx_[j]) {
      if (c == a || map_[c] == kUnmapped) continue;
      if (x_.adjacent(a, c) != y_.adjacent(b, map_[c])) return false;
    }
    return true;
  }

  void build_order() {
    for (std::size_t j = 0; j < tx_.size(); ++j) {
      std::vector<Vertex> queue;
      std::vector<std::uint8_t> seen(x_.vertex_count(), 0);
      for (Vertex v : tx_[j]) {
        if (map_[v] != kUnmapped) {
          queue.push_back(v);
          seen[v] = 1;
        }
      }
      for (Vertex start : tx_[j]) {
        if (!seen[start]) {
          seen[start] = 1;
          queue.push_back(start);
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (Vertex w : x_.neighbors(queue[i])) {
            if (ix_[w] == static_cast<int>(j) && !seen[w]) {
              seen[w] = 1;
              queue.push_back(w);
            }
          }
        }
      }
      for (Vertex v : queue) {
        if (map_[v] == kUnmapped) order_.push_back(v);
      }
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex a = order_[depth];
    const auto j = static_cast<std::size_t>(ix_[a]);
    Vertex anchor = kUnmapped;
    for (Vertex w : x_.neighbors(a)) {
      if (ix_[w] == ix_[a] && map_[w] != kUnmapped) {
        anchor = map_[w];
        break;
      }
    }
    const auto& pool = anchor == kUnmapped ? ty_[j] : y_.neighbors(anchor);
    for (Vertex b : pool) {
      if (used_[b] || iy_[b] != static_cast<int>(j) || !consistent(a, b)) continue;
      map_[a] = b;
      used_[b] = 1;
      if (extend(depth + 1)) return true;
      map_[a] = kUnmapped;
      used_[b] = 0;
    }
    return false;
  }

  const Graph& x_;
  const Graph& y_;
  const VertexSets& tx_;
  const VertexSets& ty_;
  std::span<const PickPair> picks_;
  std::vector<int> ix_;
  std::vector<int> iy_;
  PartialMap map_;
  std::vector<std::uint8_t> used_;
  std::vector<Vertex> order_;
};

std::vector<Vertex> flatten(const VertexSets& tuples) {
  std::vector<Vertex> out;
  for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool picks_covered(const VertexSets& tx, const VertexSets& ty, std::span<const PickPair> picks) {
  const auto ux = flatten(tx);
  const auto uy = flatten(ty);
  return std::all_of(picks.begin(), picks.end(), [&](const PickPair& p) {
    return std::binary_search(ux.begin(), ux.end(), p.g) &&
           std::binary_search(uy.begin(), uy.end(), p.h);
  });
}

bool far_apart(const Graph& host, const VertexSets& tuples, std::size_t bound) {
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      if (set_distance(host, tuples[a], tuples[b]) <= bound) return false;
    }
  }
  return true;
}

bool none_cyclic(const Graph& host, const VertexSets& tuples, std::size_t m) {
  return std::none_of(tuples.begin(), tuples.end(), [&](const std::vector<Vertex>& t) {
    return has_cyclic_extension(host, induced_subgraph(host, t), m);
  });
}

EquivalenceResult fail(const char* what) {
  EquivalenceResult r;
  r.failed = what;
  return r;
}

}  // namespace

std::size_t certificate_size_bound(EquivalenceLevel level) {
  const std::size_t big = pow2(2 * level.k);
  const std::size_t max = std::numeric_limits<std::size_t>::max();
  if (level.b != 0 && big > max / level.b) return max;
  const std::size_t first = big * level.b;
  const std::size_t step = pow2(level.k - 1);
  if (level.r != 0 && step > (max - first) / level.r) return max;
  return first + step * level.r;
}

std::optional<PartialMap> find_tuple_isomorphism(const Graph& x, const Graph& y,
                                                 const VertexSets& tuples_x,
                                                 const VertexSets& tuples_y,
                                                 std::span<const PickPair> picks,
                                                 const PartialMap* hint) {
  return TupleMatcher(x, y, tuples_x, tuples_y, picks).run(hint);
}

EquivalenceResult regular_equivalence(const Graph& x, const Graph& y, const VertexSets& tuples_x,
                                      const VertexSets& tuples_y, std::span<const PickPair> picks,
                                      EquivalenceLevel level, std::size_t l,
                                      const PartialMap* hint) {
  check_level(level, l);
  tuple_index(x, tuples_x, l, "tuples_x");
  tuple_index(y, tuples_y, l, "tuples_y");
  if (!picks_covered(tuples_x, tuples_y, picks)) return fail("I");
  const std::size_t reach = level.r < level.k ? pow2(level.k - level.r) : 1;
  if (level.r > 1 && (!far_apart(x, tuples_x, reach) || !far_apart(y, tuples_y, reach))) {
    return fail("II");
  }
  if (level.r < level.k && (!none_cyclic(x, tuples_x, reach) || !none_cyclic(y, tuples_y, reach))) {
    return fail("III");
  }
  const std::size_t bound = certificate_size_bound(level);
  if (flatten(tuples_x).size() > bound || flatten(tuples_y).size() > bound) return fail("IV");
  auto iso = find_tuple_isomorphism(x, y, tuples_x, tuples_y, picks, hint);
  if (!iso) return fail("V");
  EquivalenceResult ok;
  ok.holds = true;
  ok.isomorphism = std::move(iso);
  return ok;
}

bool check_regular_equivalence(const Graph& x, const Graph& y, const VertexSets& tuples_x,
                               const VertexSets& tuples_y, std::span<const PickPair> picks,
                               std::size_t k, std::size_t r, std::size_t l, std::size_t b) {
  return regular_equivalence(x, y, tuples_x, tuples_y, picks, {k, r, b}, l).holds;
}

EquivalenceResult kr_equivalence(const Graph& x, const Graph& y, const std::vector<Vertex>& tilde_x,
                                 const std::vector<Vertex>& tilde_y,
                                 std::span<const PickPair> picks, EquivalenceLevel level,
                                 const PartialMap* hint) {
  check_level(level, 1);
  if (level.r >= level.k) throw DomainError("kr_equivalence: need r < k");
  const VertexSets tx{tilde_x};
  const VertexSets ty{tilde_y};
  tuple_index(x, tx, 1, "tilde_x");
  tuple_index(y, ty, 1, "tilde_y");
  if (!picks_covered(tx, ty, picks)) return fail("I");
  const std::size_t reach = pow2(level.k - level.r);
  if (reach - 1 >= 2 && (!none_cyclic(x, tx, reach - 1) || !none_cyclic(y, ty, reach - 1))) {
    return fail("cyclic");
  }
  for (int side = 0; side < 2; ++side) {
    const Graph& host = side == 0 ? x : y;
    std::vector<Vertex> picked;
    for (const PickPair& p : picks) picked.push_back(side == 0 ? p.g : p.h);
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    if (!picked.empty() && has_type2_extension(host, induced_subgraph(host, picked), reach)) {
      return fail("type2");
    }
    const auto& tilde = side == 0 ? tilde_x : tilde_y;
    if (enumerate_cyclic_extensions(host, induced_subgraph(host, tilde), reach).size() > 1) {
      return fail("unique");
    }
  }
  const std::size_t bound = certificate_size_bound(level);
  if (tilde_x.size() > bound || tilde_y.size() > bound) return fail("IV");
  auto iso = find_tuple_isomorphism(x, y, tx, ty, picks, hint);
  if (!iso) return fail("V");
  EquivalenceResult ok;
  ok.holds = true;
  ok.isomorphism = std::move(iso);
  return ok;
}

bool check_kr_equivalence(const Graph& x, const Graph& y, const std::vector<Vertex>& tilde_x,
                          const std::vector<Vertex>& tilde_y, std::span<const PickPair> picks,
                          std::size_t k, std::size_t r, std::size_t b) {
  return kr_equivalence(x, y, tilde_x, tilde_y, picks, {k, r, b}).holds;
}

}  // namespace folab
