#include "folab/fo_logic/builders.hpp"

#include <string>

#include "folab/graph_core/errors.hpp"

namespace folab {

std::string FormulaBuilder::fresh() { return "q" + std::to_string(++counter_); }

Formula FormulaBuilder::dist(std::size_t i, const std::string& x, const std::string& y) {
  if (i == 0) return eq(x, y);
  if (i == 1) return adj(x, y);
  const auto key = std::make_tuple(false, i, x, y);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const std::string v = fresh();
  Formula f = exists(v, conj({dist(i / 2, x, v), dist(i - i / 2, y, v)}));
  cache_.emplace(key, f);
  return f;
}

Formula FormulaBuilder::dist_exact(std::size_t i, const std::string& x, const std::string& y) {
  if (i <= 1) return dist(i, x, y);
  const auto key = std::make_tuple(true, i, x, y);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::vector<Formula> shorter;
  for (std::size_t j = 1; j < i; ++j) shorter.push_back(dist(j, x, y));
  Formula f = conj({dist(i, x, y), neg(disj(std::move(shorter)))});
  cache_.emplace(key, f);
  return f;
}

Formula FormulaBuilder::dist_exact_via(std::size_t i, std::size_t j, const std::string& x,
                                       const std::string& y, const std::string& z) {
  return conj({dist_exact(i, x, z), dist_exact(j, z, y)});
}

Formula dist_formula(std::size_t i, const std::string& x, const std::string& y) {
  return FormulaBuilder().dist(i, x, y);
}

Formula dist_exact_formula(std::size_t i, const std::string& x, const std::string& y) {
  return FormulaBuilder().dist_exact(i, x, y);
}

Formula clique_formula(const std::vector<std::string>& vars) {
  if (vars.size() < 2) throw DomainError("clique formula needs at least two variables");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) parts.push_back(adj(vars[i], vars[j]));
  return conj(std::move(parts));
}

Formula common_neighbor_formula(const std::string& y, const std::vector<std::string>& xs) {
  if (xs.empty()) throw DomainError("common neighbor formula needs at least one vertex");
  std::vector<Formula> parts;
  for (const auto& x : xs) parts.push_back(adj(y, x));
  return conj(std::move(parts));
}

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Formula exists_block(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

Formula forall_block(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

}  // namespace

Formula theorem1_sentence(int k) {
  if (k < 5) throw DomainError("theorem 1 sentence needs k >= 5");
  const auto h = static_cast<std::size_t>(k / 2);
  const auto xs = numbered("x", h);
  const auto ys = numbered("y", h);

  std::vector<Formula> y_parts;
  for (const auto& y : ys) y_parts.push_back(common_neighbor_formula(y, xs));
  y_parts.push_back(clique_formula(ys));
  Formula clique_of_neighbors = exists_block(ys, conj(std::move(y_parts)));

  // Pair predicate on (i, j) = (1, 2), applied to a = y.
  auto pair_predicate = [&](const std::string& a) {
    std::vector<std::string> targets{"z", a};
    targets.insert(targets.end(), xs.begin() + 2, xs.end());
    return exists("v", conj({common_neighbor_formula("v", targets), neg(adj("v", xs[0])),
                             neg(adj("v", xs[1]))}));
  };
  // Single predicate for index i (0-based), i >= 1.
  auto single_predicate = [&](std::size_t i) {
    std::vector<std::string> targets{"z"};
    for (std::size_t t = 0; t < h; ++t)
      if (t != i) targets.push_back(xs[t]);
    return exists("v", common_neighbor_formula("v", targets));
  };
  std::vector<Formula> z_parts;
  for (std::size_t i = 1; i < h; ++i) z_parts.push_back(single_predicate(i));
  z_parts.push_back(forall("y", implies(common_neighbor_formula("y", xs), pair_predicate("y"))));
  Formula no_closing_vertex = neg(exists("z", conj(std::move(z_parts))));

  return exists_block(xs, conj({clique_formula(xs), clique_of_neighbors, no_closing_vertex}));
}

Formula theorem2_sentence(int k) {
  if (k < 8) throw DomainError("theorem 2 sentence needs k >= 8");
  if (k > 20) throw CapacityError("theorem 2 sentence: k too large to build");
  const std::size_t full = std::size_t{1} << (k - 5);
  const std::size_t half = full / 2;
  const std::size_t quarter = full / 4;
  FormulaBuilder fb;

  // Disjunction of the first kind: a reaches x in i steps, x reaches u1 in s - i steps,
  // x reaches u2 in j steps.
  std::vector<Formula> first_kind;
  for (std::size_t s = half; s <= full; ++s) {
    for (std::size_t i = 1; i <= s; ++i) {
      const std::size_t j_low = half > i ? half - i : 0;
      for (std::size_t j = j_low; j <= full - i; ++j) {
        first_kind.push_back(conj({fb.dist_exact_via(i, s - i, "a", "u1", "x"), fb.dist_exact(j, "x", "u2")}));
      }
    }
  }
  std::vector<Formula> second_kind;
  for (std::size_t i = 1; i <= half; ++i) {
    second_kind.push_back(conj({fb.dist_exact_via(i, half - i, "u1", "b", "x"), fb.dist_exact(i, "u2", "x")}));
  }
  Formula psi = neg(disj({disj(std::move(first_kind)), disj(std::move(second_kind))}));

  Formula s_pred = conj(
      {fb.dist_exact(full, "a", "b"),
       neg(exists("u1", exists("u2", exists("x", conj({neg(eq("u1", "u2")),
                                                          fb.dist_exact_via(half, half, "u1", "u2", "b"),
                                                          fb.dist_exact_via(half, half, "u1", "u2", "a"),
                                                          psi})))))});

  auto xi = [&](const std::string& c) {
    std::vector<Formula> parts;
    for (std::size_t i = 1; i + 1 <= quarter; ++i) {
      parts.push_back(conj({fb.dist_exact_via(i, half - i, c, "x1", "y"), fb.dist_exact(quarter - i, "y", "x2")}));
    }
    if (parts.empty()) return neg(exists("y", neg(eq("y", "y"))));
    return neg(exists("y", disj(std::move(parts))));
  };
  Formula r_pred = exists(
      "x1", exists("x2", conj({fb.dist_exact_via(half, half, "a", "u", "x1"),
                               fb.dist_exact_via(quarter, quarter, "a", "u", "x2"),
                               neg(fb.dist_exact(quarter, "x1", "x2")), xi("a"), xi("u")})));

  Formula midpoint = fb.dist_exact_via(half, half, "a", "b", "u");
  Formula phi = conj({s_pred, forall("u", implies(midpoint, r_pred)),
                      neg(exists("z", conj({neg(eq("z", "a")),
                                            forall("u", implies(midpoint, fb.dist_exact(full, "u", "z")))})))});
  return exists("a", exists("b", phi));
}

Formula subgraph_sentence(const Graph& g, std::size_t cap) {
  if (g.vertex_count() == 0) throw DomainError("pattern graph is empty");
  if (g.vertex_count() > cap) throw CapacityError("subgraph sentence: pattern exceeds cap");
  const auto vars = numbered("x", g.vertex_count());
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) parts.push_back(neg(eq(vars[i], vars[j])));
  for (const Edge& e : g.edges()) parts.push_back(adj(vars[e.u], vars[e.v]));
  if (parts.empty()) parts.push_back(eq(vars[0], vars[0]));
  return exists_block(vars, conj(std::move(parts)));
}

Formula extension_sentence(const RootedPair& pair, std::size_t cap) {
  const Graph& g = pair.big();
  if (g.vertex_count() > cap) throw CapacityError("extension sentence: pattern exceeds cap");
  std::vector<std::string> name(g.vertex_count());
  std::vector<std::string> root_vars;
  std::vector<std::string> new_vars;
  for (std::size_t i = 0; i < pair.roots().size(); ++i) {
    name[pair.roots()[i]] = "x" + std::to_string(i + 1);
    root_vars.push_back(name[pair.roots()[i]]);
  }
  for (std::size_t i = 0; i < pair.new_vertices().size(); ++i) {
    name[pair.new_vertices()[i]] = "y" + std::to_string(i + 1);
    new_vars.push_back(name[pair.new_vertices()[i]]);
  }
  std::vector<Formula> body;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (pair.is_root(a) && pair.is_root(b)) continue;
      body.push_back(neg(eq(name[a], name[b])));
    }
  }
  for (const Edge& e : g.edges())
    if (!pair.is_small_edge(e.u, e.v)) body.push_back(adj(name[e.u], name[e.v]));
  if (root_vars.empty() && new_vars.empty()) throw DomainError("extension sentence of an empty pair");
  if (body.empty()) {
    const std::string& any = new_vars.empty() ? root_vars.front() : new_vars.front();
    body.push_back(eq(any, any));
  }
  Formula inner = exists_block(new_vars, conj(std::move(body)));

  std::vector<Formula> distinct;
  for (std::size_t i = 0; i < root_vars.size(); ++i)
    for (std::size_t j = i + 1; j < root_vars.size(); ++j) distinct.push_back(neg(eq(root_vars[i], root_vars[j])));
  if (!distinct.empty()) inner = implies(conj(std::move(distinct)), std::move(inner));
  return forall_block(root_vars, std::move(inner));
}

}  // namespace folab
