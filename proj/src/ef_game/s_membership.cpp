#include "folab/ef_game/s_membership.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "folab/ext_pairs/densities.hpp"
#include "folab/ext_pairs/extensions.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/rgraph_mc/copies.hpp"

namespace folab {

namespace {

std::size_t pair_bit(std::size_t i, std::size_t j) {
  // i < j
  return j * (j - 1) / 2 + i;
}

// Smallest edge bitmask over relabelings that map {0..h-1} onto itself.
std::uint32_t canonical_code(std::size_t n, std::size_t h, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    do {
      std::uint32_t code = 0;
      for (const Edge& e : edges) {
        const Vertex a = perm[e.u];
        const Vertex b = perm[e.v];
        code |= std::uint32_t{1} << pair_bit(std::min(a, b), std::max(a, b));
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(h), perm.end()));
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(h)));
  return best;
}

// Rooted patterns on h roots and n_new new vertices with no root-root edges, one per
// class.
std::vector<RootedPair> rooted_patterns(std::size_t h, std::size_t n_new) {
  const std::size_t n = h + n_new;
  std::vector<Edge> slots;
  for (Vertex j = static_cast<Vertex>(h); j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  VertexTuple roots(h);
  std::iota(roots.begin(), roots.end(), 0);
  std::set<std::uint32_t> seen;
  std::vector<RootedPair> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1U) edges.push_back(slots[s]);
    }
    std::sort(edges.begin(), edges.end());
    if (!seen.insert(canonical_code(n, h, edges)).second) continue;
    out.emplace_back(Graph(n, edges), roots, std::vector<Edge>{});
  }
  return out;
}

std::string describe(const RootedPair& p) {
  std::ostringstream out;
  out << "roots=" << p.root_count() << " new=" << p.new_vertices().size() << " edges=[";
  bool first = true;
  for (const Edge& e : p.big().edges()) {
    out << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  out << ']';
  return out.str();
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "v=" << g.vertex_count() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  out << ']';
  return out.str();
}

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (auto v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

void check_caps(const MembershipCaps& caps) {
  const auto& lim = kMembershipCapLimits;
  if (caps.max_subgraph_v > lim.max_subgraph_v || caps.max_pattern_v > lim.max_pattern_v ||
      caps.max_root_v > lim.max_root_v) {
    throw CapacityError("check_S_membership: caps exceed the supported limits (" +
                        std::to_string(lim.max_subgraph_v) + ", " +
                        std::to_string(lim.max_pattern_v) + ", " +
                        std::to_string(lim.max_root_v) + ")");
  }
  if (caps.max_subgraph_v == 0 || caps.max_pattern_v < 2) {
    throw DomainError("check_S_membership: need max_subgraph_v >= 1 and max_pattern_v >= 2");
  }
}

struct Constraint {
  RootedPair pattern;
  std::size_t t_size;
};

bool maximal_for_all(const Graph& host, std::span<const Vertex> gt,
                     std::optional<std::span<const Vertex>> ht,
                     const std::vector<Constraint>& constraints) {
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) {
    if (c.t_size > gt.size()) return true;
    return is_kt_maximal(host, gt, ht, c.pattern, c.t_size);
  });
}

void property1(const Graph& gamma, const Rational& bound, std::size_t cap,
               MembershipReport& report) {
  const std::size_t n = gamma.vertex_count();
  std::vector<Vertex> chosen;
  bool found = false;
  for (std::size_t size = 1; size <= std::min(cap, n) && !found; ++size) {
    // Combinations of `size` vertices with their induced edge count.
    auto rec = [&](auto&& self, Vertex start, std::size_t edges) -> void {
      if (found) return;
      if (chosen.size() == size) {
        const Rational rho(static_cast<std::int64_t>(edges), static_cast<std::int64_t>(size));
        if (rho > bound) {
          found = true;
          report.failures.push_back({1, "vertices {" + join(chosen) + "} density " +
                                            to_string(rho)});
        }
        return;
      }
      for (Vertex v = start; v < n; ++v) {
        std::size_t added = 0;
        for (Vertex c : chosen) added += gamma.adjacent(c, v);
        chosen.push_back(v);
        self(self, v + 1, edges + added);
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
}

void property2(const Graph& gamma, const Alpha& alpha, const MembershipCaps& caps,
               const std::vector<Constraint>& constraints, MembershipReport& report) {
  const std::size_t n = gamma.vertex_count();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t h = 0; h <= caps.max_root_v; ++h) {
    for (std::size_t n_new = 1; h + n_new <= caps.max_pattern_v; ++n_new) {
      for (const RootedPair& pattern : rooted_patterns(h, n_new)) {
        if (!is_alpha_safe(pattern, alpha)) continue;
        ++report.safe_patterns;
        std::vector<Vertex> tuple;
        auto visit_tuple = [&](auto&& self) -> bool {
          if (tuple.size() == h) {
            bool ok = false;
            for_each_extension(gamma, pattern, tuple, ExtensionQuery{true, {}},
                               [&](std::span<const Vertex> image) {
                                 const std::vector<Vertex> gt(image.begin(), image.end());
                                 ok = maximal_for_all(gamma, gt, std::span<const Vertex>(tuple),
                                                      constraints);
                                 return !ok;
                               });
            if (!ok) {
              report.failures.push_back(
                  {2, "pattern " + describe(pattern) + " tuple (" + join(tuple) + ")"});
            }
            return ok;
          }
          for (Vertex v : all) {
            if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
            tuple.push_back(v);
            const bool go_on = self(self);
            tuple.pop_back();
            if (!go_on) return false;
          }
          return true;
        };
        if (h <= n) visit_tuple(visit_tuple);
      }
    }
  }
}

void property3(const Graph& gamma, const Alpha& alpha, const MembershipCaps& caps,
               const std::vector<Constraint>& constraints, MembershipReport& report) {
  for (const Graph& pattern : sparse_balanced_graphs(alpha, caps.max_subgraph_v)) {
    ++report.sparse_graphs;
    std::set<std::vector<Vertex>> tried;
    bool ok = false;
    for_each_embedding(gamma, pattern, [&](std::span<const Vertex> image) {
      std::vector<Vertex> gt(image.begin(), image.end());
      std::sort(gt.begin(), gt.end());
      if (!tried.insert(gt).second) return true;
      ok = maximal_for_all(gamma, gt, std::nullopt, constraints);
      return !ok;
    });
    if (!ok) report.failures.push_back({3, "no maximal copy of " + describe(pattern)});
  }
}

}  // namespace

bool MembershipReport::passes(int property) const noexcept {
  return std::none_of(failures.begin(), failures.end(),
                      [&](const MembershipFailure& f) { return f.property == property; });
}

std::vector<RootedPair> negative_constraints(const Alpha& alpha, std::size_t max_pattern_v) {
  std::vector<RootedPair> out;
  for (std::size_t t = 0; t <= 2; ++t) {
    for (std::size_t n_new = 1; t + n_new <= max_pattern_v; ++n_new) {
      for (RootedPair& p : rooted_patterns(t, n_new)) {
        if (f_alpha(p, alpha) < Rational(0)) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<Graph> sparse_balanced_graphs(const Alpha& alpha, std::size_t max_v) {
  if (max_v > kMembershipCapLimits.max_subgraph_v) {
    throw CapacityError("sparse_balanced_graphs: too many vertices");
  }
  const Rational bound = Rational(1) / alpha.value();
  std::vector<Graph> out;
  std::vector<std::vector<Edge>> layer{{}};  // one class per entry, on v vertices
  for (std::size_t v = 1; v <= max_v; ++v) {
    std::vector<std::vector<Edge>> next;
    if (v == 1) {
      next.push_back({});
    } else {
      std::set<std::uint32_t> seen;
      for (const auto& base : layer) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (v - 1)); ++mask) {
          auto edges = base;
          for (Vertex u = 0; u + 1 < v; ++u) {
            if (mask >> u & 1U) edges.emplace_back(u, static_cast<Vertex>(v - 1));
          }
          std::sort(edges.begin(), edges.end());
          if (seen.insert(canonical_code(v, 0, edges)).second) next.push_back(std::move(edges));
        }
      }
    }
    for (const auto& edges : next) {
      Graph g(v, edges);
      if (density(g) < bound && is_strictly_balanced(g)) out.push_back(std::move(g));
    }
    layer = std::move(next);
  }
  return out;
}

MembershipReport check_S_membership(const Graph& gamma, const Alpha& alpha,
                                    const MembershipCaps& caps) {
  check_caps(caps);
  MembershipReport report;
  const Rational bound = Rational(1) / alpha.value();
  std::vector<Constraint> constraints;
  for (RootedPair& p : negative_constraints(alpha, caps.max_pattern_v)) {
    const std::size_t t = p.root_count();
    constraints.push_back({std::move(p), t});
  }
  report.constraints = constraints.size();
  property1(gamma, bound, caps.max_subgraph_v, report);
  property2(gamma, alpha, caps, constraints, report);
  property3(gamma, alpha, caps, constraints, report);
  return report;
}

}  // namespace folab
