// Acceptance checks, one per criterion: `acceptance --criterion N` prints one
// PASS/FAIL line and exits 0 on pass, 1 on fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "folab/ef_game/crosscheck.hpp"
#include "folab/ef_game/s_membership.hpp"
#include "folab/ef_game/solver.hpp"
#include "folab/ef_game/strategy.hpp"
#include "folab/ext_pairs/cyclic.hpp"
#include "folab/ext_pairs/densities.hpp"
#include "folab/fo_logic/builders.hpp"
#include "folab/fo_logic/evaluator.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/graph_io.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/graph_core/subgraph.hpp"
#include "folab/rgraph_mc/copies.hpp"
#include "folab/rgraph_mc/experiments.hpp"
#include "folab/rgraph_mc/witness.hpp"
#include "oracles.hpp"

using namespace folab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

PoissonReport triangle_poisson() {
  SampleSpec spec;
  spec.n = 300;
  spec.seed = 1;
  spec.trials = 2000;
  return poisson_check(spec, complete_graph(3));
}

Outcome poisson_mean_and_fit() {
  const auto start = std::chrono::steady_clock::now();
  const PoissonReport r = triangle_poisson();
  const double secs = seconds_since(start);
  const bool mean_ok = r.mean >= 0.1417 && r.mean <= 0.1917;
  const bool fit_ok = r.p_value >= 0.01;
  return {mean_ok && fit_ok && secs <= 120,
          "mean=" + fmt(r.mean) + " in [0.1417,0.1917] " + (mean_ok ? "yes" : "no") + ", chi2 p=" +
              fmt(r.p_value) + " >= 0.01 " + (fit_ok ? "yes" : "no") + ", " + fmt(secs) + "s"};
}

Outcome containment_fraction() {
  const PoissonReport r = triangle_poisson();
  const double target = 1.0 - std::exp(-1.0 / 6.0);
  const bool ok = std::abs(r.containment_fraction - target) <= 0.05;
  return {ok, "fraction=" + fmt(r.containment_fraction) + " target=" + fmt(target) + " +-0.05"};
}

Outcome k4_threshold() {
  ScanConfig cfg;
  cfg.n_values = {300};
  cfg.alphas = {Rational(55, 100), Rational(8, 10)};
  cfg.trials = 500;
  cfg.seed = 3;
  const Graph k4 = complete_graph(4);
  const auto cells = threshold_scan(cfg, [&](const Graph& g) { return contains_copy(g, k4); });
  const double below = cells[0].estimate.p_hat;
  const double above = cells[1].estimate.p_hat;
  return {below >= 0.9 && above <= 0.1, "p_hat(0.55)=" + fmt(below) + " need >= 0.9, p_hat(0.8)=" + fmt(above) +
                                            " need <= 0.1"};
}

Outcome density_identities() {
  std::size_t checked = 0;
  std::string failures;
  for (int k = 5; k <= 9; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const Rational alpha = theorem1_alpha(k, m);
      if (alpha >= 1) continue;
      ++checked;
      try {
        const Witness w = build_theorem1_witness(k, m);
        if (1 / density(w.x) != alpha || 1 / density(w.y) != alpha || w.alpha != alpha) {
          failures += " t1(" + std::to_string(k) + "," + std::to_string(m) + ")";
        }
      } catch (const DomainError&) {
        failures += " t1(" + std::to_string(k) + "," + std::to_string(m) + ")infeasible";
      }
    }
  }
  for (int k = 8; k <= 9; ++k) {
    const std::int64_t len = std::int64_t{1} << (k - 5);
    for (int m = 2; m <= 3; ++m) {
      ++checked;
      const Witness w = build_theorem2_witness(k, m);
      if (1 / density(w.x) != theorem2_alpha(k, m) || rel_density(w.pair()) != Rational(len * m, (len - 1) * m + 1)) {
        failures += " t2(" + std::to_string(k) + "," + std::to_string(m) + ")";
      }
    }
  }
  return {failures.empty(), std::to_string(checked) + " grid points, failing:" + (failures.empty() ? " none" : failures)};
}

Outcome strict_balance() {
  std::size_t checked = 0;
  std::string failures;
  auto check = [&](const std::string& name, const Witness& w) {
    ++checked;
    if (!is_strictly_balanced_uncapped(w.x) || !is_strictly_balanced_pair_uncapped(w.pair())) failures += " " + name;
  };
  for (int k = 5; k <= 9; ++k) {
    for (int m = 1; m <= 4; ++m) {
      if (theorem1_alpha(k, m) >= 1) continue;
      const std::string name = "t1(" + std::to_string(k) + "," + std::to_string(m) + ")";
      try {
        check(name, build_theorem1_witness(k, m));
      } catch (const DomainError&) {
        ++checked;
        failures += " " + name + "infeasible";
      }
    }
  }
  for (int k = 8; k <= 9; ++k) {
    for (int m = 2; m <= 3; ++m) check("t2(" + std::to_string(k) + "," + std::to_string(m) + ")", build_theorem2_witness(k, m));
  }
  return {failures.empty(), std::to_string(checked) + " witnesses, failing:" + (failures.empty() ? " none" : failures)};
}

Outcome oracle_equivalences() {
  std::mt19937_64 rng(6);
  std::size_t copy_mismatch = 0;
  for (int t = 0; t < 500; ++t) {
    const Graph host = oracle::random_graph(rng, 1 + rng() % 7, 0.5);
    const Graph pattern = oracle::random_graph(rng, 1 + rng() % 4, 0.5);
    if (count_copies(host, pattern) * oracle::automorphisms(pattern) != oracle::injective_maps(host, pattern)) {
      ++copy_mismatch;
    }
  }
  const std::vector<Rational> grid{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                   Rational(2, 3), Rational(3, 4), Rational(15, 16)};
  std::size_t safe_checks = 0;
  std::size_t safe_mismatch = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const Graph big = oracle::random_graph(rng, n, 0.5);
    const std::size_t r = 1 + rng() % (n - 1);
    VertexTuple roots(r);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < r; ++i) {
      roots[i] = static_cast<Vertex>(i);
      mask |= 1u << i;
    }
    std::vector<Edge> small;
    for (const Edge& e : big.edges()) {
      if (e.v < r && (rng() % 4 != 0)) small.push_back(e);
    }
    const RootedPair pair(big, roots, small);
    for (const Rational& a : grid) {
      ++safe_checks;
      if (is_alpha_safe(pair, Alpha(a)) != oracle::alpha_safe(big, mask, small.size(), a)) ++safe_mismatch;
    }
  }
  std::size_t extensions = 0;
  std::size_t conservation = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph host = oracle::random_graph(rng, 3 + rng() % 6, 0.35);
    std::vector<Vertex> base;
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
      if (rng() % 3 == 0) base.push_back(v);
    }
    if (base.empty()) base.push_back(0);
    const std::size_t m = 3 + rng() % 4;
    for (const CyclicExtension& ext : enumerate_cyclic_extensions(host, induced_subgraph(host, base), m)) {
      ++extensions;
      if (ext.new_edges.size() != ext.new_vertices.size() + 1) ++conservation;
    }
  }
  const bool ok = copy_mismatch == 0 && safe_mismatch == 0 && conservation == 0 && extensions > 0;
  return {ok, "copies 500 instances mismatches=" + std::to_string(copy_mismatch) + ", alpha-safe " +
                  std::to_string(safe_checks) + " checks mismatches=" + std::to_string(safe_mismatch) +
                  ", cyclic " + std::to_string(extensions) + " extensions violations=" + std::to_string(conservation)};
}

Outcome distance_formulas() {
  std::vector<CompiledFormula> exact;
  for (std::size_t i = 0; i <= 8; ++i) exact.emplace_back(dist_exact_formula(i));
  std::mt19937_64 rng(7);
  std::size_t checks = 0;
  std::size_t mismatch = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (t % 5));
    const auto d = oracle::all_distances(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        for (std::size_t i = 1; i <= 8; ++i) {
          ++checks;
          if (evaluate(g, exact[i], {{"x", x}, {"y", y}}) != (d[x][y] == i)) ++mismatch;
        }
      }
    }
  }
  std::size_t depth_mismatch = 0;
  for (std::size_t i = 1; i <= 64; ++i) {
    std::size_t want = 0;
    while ((std::size_t{1} << want) < i) ++want;
    if (depth(dist_formula(i)) != want || depth(dist_exact_formula(i)) != want) ++depth_mismatch;
  }
  return {mismatch == 0 && depth_mismatch == 0 && checks >= 2000,
          std::to_string(checks) + " pair checks mismatches=" + std::to_string(mismatch) +
              ", depth mismatches over i=1..64: " + std::to_string(depth_mismatch)};
}

Outcome ehrenfeucht_crosscheck() {
  const auto start = std::chrono::steady_clock::now();
  const auto battery = random_sentence_battery(50, 3, 8);
  const auto pairs = random_graph_pairs(200, 7, 8);
  std::size_t violations = 0;
  std::size_t separated = 0;
  std::size_t self_losses = 0;
  std::size_t non_monotone = 0;
  for (const auto& [g, h] : pairs) {
    const CrosscheckReport r = crosscheck_ehrenfeucht(g, h, 3, battery);
    violations += r.violations.size();
    if (r.separating > 0) ++separated;
    GameSolver solver(g, h);
    bool spoiler = false;
    for (std::size_t k = 1; k <= 4; ++k) {
      const bool now = solver.value({}, k) == Winner::SpoilerWins;
      if (spoiler && !now) ++non_monotone;
      spoiler = spoiler || now;
    }
    for (const Graph* x : {&g, &h}) {
      for (std::size_t k = 1; k <= 3; ++k) {
        if (solve(*x, *x, k) != Winner::DuplicatorWins) ++self_losses;
      }
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && self_losses == 0 && non_monotone == 0 && secs <= 300,
          "200 pairs x 50 sentences: violations=" + std::to_string(violations) + " (pairs separated by the battery: " +
              std::to_string(separated) + "), solve(G,G) losses=" + std::to_string(self_losses) +
              ", monotonicity breaks=" + std::to_string(non_monotone) + ", " + fmt(secs) + "s"};
}

Outcome scripted_strategy() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> bases;
  for (int i = 0; i < 12; ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "/s_member_%02d.graph", i);
    bases.push_back(load_graph(std::string(FOLAB_TEST_DATA_DIR) + name));
  }
  const Alpha alpha(Rational(15, 16));
  const MembershipCaps caps{4, 3, 1};
  std::size_t non_members = 0;
  for (const Graph& g : bases) {
    if (!check_S_membership(g, alpha, caps).member()) ++non_members;
  }
  std::mt19937_64 rng(9);
  std::size_t lost = 0;
  std::size_t disputed = 0;
  std::size_t scripted = 0;
  std::size_t by_solver = 0;
  std::size_t gaps = 0;
  std::size_t fallbacks = 0;
  for (std::size_t pair = 0; pair < 50; ++pair) {
    const Graph& g = bases[pair % bases.size()];
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    ScriptedDuplicator dup(g, h, 4, {alpha, 1, false});
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const PlayoutResult r = random_spoiler_playout(dup, g, h, 4, pair * 1000 + seed);
      if (r.winner != Winner::DuplicatorWins) ++lost;
      if (!r.referee_agrees) ++disputed;
      scripted += r.context.scripted_moves;
      by_solver += r.context.solver_moves;
      gaps += r.context.script_gaps;
      if (r.context.fallback) ++fallbacks;
    }
  }
  const double secs = seconds_since(start);
  return {lost == 0 && disputed == 0 && non_members == 0,
          "50 pairs x 200 playouts: lost=" + std::to_string(lost) + " referee disagreements=" +
              std::to_string(disputed) + " non-member bases=" + std::to_string(non_members) +
              "; moves scripted=" + std::to_string(scripted) + " solver=" + std::to_string(by_solver) +
              " script gaps=" + std::to_string(gaps) + " games with fallback=" + std::to_string(fallbacks) + ", " +
              fmt(secs) + "s"};
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(FOLAB_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

Outcome determinism() {
  const std::vector<std::string> commands{
      "scan --n 100,200 --alpha 1/2,2/3,4/5 --trials 100 --property K4 --seed 42",
      "scan --theorem1-k 5 --m 2,3,4 --n 150 --trials 80 --property triangle --seed 5 --epsilon 1/20",
      "mc --n 300 --alpha 1 --trials 300 --property triangle --seed 7",
      "mc --n 60 --p 0.05 --trials 200 --property C4 --seed 7 --format json",
  };
  std::size_t differing = 0;
  for (const std::string& c : commands) {
    const std::string a = capture(c);
    const std::string b = capture(c);
    if (a != b || a.find("<exit") != std::string::npos) ++differing;
  }
  return {differing == 0, std::to_string(commands.size()) + " scan/mc invocations run twice, differing=" +
                              std::to_string(differing)};
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0) criterion = std::atoi(argv[i + 1]);
  }
  if (criterion < 1 || criterion > 10) {
    std::cerr << "usage: acceptance --criterion 1..10\n";
    return 2;
  }
  Outcome (*const checks[])() = {poisson_mean_and_fit, containment_fraction, k4_threshold,
                                 density_identities,   strict_balance,       oracle_equivalences,
                                 distance_formulas,    ehrenfeucht_crosscheck, scripted_strategy,
                                 determinism};
  Outcome o;
  try {
    o = checks[criterion - 1]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << "criterion " << criterion << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
  return o.pass ? 0 : 1;
}
