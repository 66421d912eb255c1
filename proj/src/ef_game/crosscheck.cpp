#include "folab/ef_game/crosscheck.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "folab/ef_game/solver.hpp"
#include "folab/fo_logic/evaluator.hpp"
#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

class SentenceGenerator {
 public:
  explicit SentenceGenerator(std::uint64_t seed) : rng_(seed) {}

  Formula sentence(std::size_t max_depth) {
    std::vector<std::string> bound;
    budget_ = 12;
    return quantified(bound, pick(1, max_depth));
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  const std::string& any_of(const std::vector<std::string>& vars) { return vars[pick(0, vars.size() - 1)]; }

  Formula quantified(std::vector<std::string>& bound, std::size_t depth) {
    std::string var = "x" + std::to_string(bound.size() + 1);
    bound.push_back(var);
    Formula body = matrix(bound, depth - 1);
    bound.pop_back();
    return pick(0, 1) ? exists(std::move(var), std::move(body)) : forall(std::move(var), std::move(body));
  }

  // Distinct variables when two are bound; adj(x,x) is constant.
  Formula atom(const std::vector<std::string>& bound) {
    const std::string& a = any_of(bound);
    std::string b = any_of(bound);
    while (bound.size() > 1 && b == a) b = any_of(bound);
    if (a == b) return pick(0, 1) ? eq(a, b) : adj(a, b);
    return pick(0, 3) > 0 ? adj(a, b) : eq(a, b);
  }

  Formula matrix(std::vector<std::string>& bound, std::size_t depth) {
    if (budget_ > 0) --budget_;
    const std::size_t roll = pick(0, 9);
    if (budget_ == 0 || (depth == 0 && roll < 4)) return atom(bound);
    if (depth > 0 && roll < 4) return quantified(bound, depth);
    if (roll < 6) return neg(matrix(bound, depth));
    Formula left = matrix(bound, depth);
    Formula right = matrix(bound, depth);
    if (roll < 8) return conj({std::move(left), std::move(right)});
    if (roll < 9) return disj({std::move(left), std::move(right)});
    return implies(std::move(left), std::move(right));
  }

  std::mt19937_64 rng_;
  std::size_t budget_ = 0;
};

}  // namespace

std::vector<Formula> random_sentence_battery(std::size_t count, std::size_t max_depth,
                                             std::uint64_t seed) {
  if (max_depth == 0) throw DomainError("random_sentence_battery: need max_depth >= 1");
  SentenceGenerator gen(seed);
  std::vector<Formula> out;
  std::set<std::string> seen;
  // Small depths have few distinct sentences; give up after a generous number of draws.
  for (std::size_t draws = 0; out.size() < count && draws < 1000 * (count + 1); ++draws) {
    Formula f = gen.sentence(max_depth);
    if (seen.insert(to_string(f)).second) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<Graph, Graph>> random_graph_pairs(std::size_t count, std::size_t max_v,
                                                        std::uint64_t seed) {
  if (max_v == 0) throw DomainError("random_graph_pairs: need max_v >= 1");
  std::mt19937_64 rng(seed);
  auto sample = [&rng](std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() & 1) edges.emplace_back(u, v);
      }
    }
    return Graph(n, edges);
  };
  std::vector<std::pair<Graph, Graph>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_v;
    Graph g = sample(n);
    const std::size_t mode = rng() % 3;
    if (mode == 2 || n < 2) {
      out.emplace_back(std::move(g), sample(1 + rng() % max_v));
      continue;
    }
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = g;
    if (mode == 1) {
      const Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % (n - 1));
      if (v >= u) ++v;
      std::vector<Edge> edges;
      for (const Edge& e : g.edges()) {
        if (e != Edge(u, v)) edges.push_back(e);
      }
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
      std::sort(edges.begin(), edges.end());
      h = Graph(n, edges);
    }
    out.emplace_back(std::move(g), relabel(h, perm));
  }
  return out;
}

CrosscheckReport crosscheck_ehrenfeucht(const Graph& g, const Graph& h, std::size_t k,
                                        std::span<const Formula> battery) {
  for (const Formula& f : battery) {
    if (!is_closed(f)) throw DomainError("crosscheck: open formula " + to_string(f));
    if (depth(f) > k) throw DomainError("crosscheck: formula deeper than k: " + to_string(f));
  }
  GameSolver solver(g, h);
  CrosscheckReport report;
  report.value = solver.value({}, k);
  for (const Formula& f : battery) {
    if (evaluate(g, f) == evaluate(h, f)) continue;
    ++report.separating;
    if (report.value == Winner::DuplicatorWins) {
      report.violations.push_back({CrosscheckViolation::Kind::SeparatedDespiteDuplicatorWin, f});
    }
    if (solver.value({}, depth(f)) == Winner::DuplicatorWins) {
      report.violations.push_back({CrosscheckViolation::Kind::SolverMissedSeparation, f});
    }
  }
  return report;
}

}  // namespace folab
