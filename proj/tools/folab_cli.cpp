#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "folab/ef_game/crosscheck.hpp"
#include "folab/ef_game/s_membership.hpp"
#include "folab/ef_game/solver.hpp"
#include "folab/ef_game/strategy.hpp"
#include "folab/ext_pairs/densities.hpp"
#include "folab/ext_pairs/rooted_pair.hpp"
#include "folab/fo_logic/evaluator.hpp"
#include "folab/fo_logic/parser.hpp"
#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/graph_io.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/rgraph_mc/copies.hpp"
#include "folab/rgraph_mc/estimate.hpp"
#include "folab/rgraph_mc/experiments.hpp"
#include "folab/rgraph_mc/witness.hpp"

using namespace folab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapacity = 4;

// Formulas deeper than this are refused before sampling.
constexpr std::size_t kFormulaDepthGuard = 10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  Json params = Json::object();
  std::uint64_t seed = 0;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  bool timing = false;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// One flat record as text (key=value), CSV (header plus row) or JSON.
void emit_record(const Globals& globals, const RunConfig& config, const Json& record,
                 const std::string& default_format = "text") {
  const std::string format = globals.format.empty() ? default_format : globals.format;
  Sink sink(globals.out);
  std::ostream& out = sink.stream();
  if (format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = config.command;
    doc["config"] = config.params;
    doc["seed"] = config.seed;
    for (const auto& [key, value] : record.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "schema_version";
    for (const auto& item : record.items()) {
      if (!item.value().is_structured()) out << ',' << item.key();
    }
    out << '\n' << kSchemaVersion;
    for (const auto& item : record.items()) {
      if (!item.value().is_structured()) out << ',' << plain(item.value());
    }
    out << '\n';
    return;
  }
  out << "schema_version=" << kSchemaVersion;
  for (const auto& item : record.items()) {
    if (!item.value().is_structured()) out << ' ' << item.key() << '=' << plain(item.value());
  }
  out << '\n';
}

Json cell_json(const ScanCell& cell, bool timing) {
  const Estimate& e = cell.estimate;
  Json row;
  row["n"] = cell.n;
  row["alpha"] = to_string(cell.alpha);
  row["p"] = e.p;
  row["trials"] = e.trials;
  row["hits"] = e.hits;
  row["p_hat"] = e.p_hat;
  row["ci_low"] = e.ci_low;
  row["ci_high"] = e.ci_high;
  row["seed"] = e.spec.seed;
  row["wall_ms"] = timing ? e.wall_ms : 0.0;
  return row;
}

void emit_cells(const Globals& globals, const RunConfig& config, const std::vector<ScanCell>& cells) {
  const std::string format = globals.format.empty() ? "csv" : globals.format;
  Sink sink(globals.out);
  std::ostream& out = sink.stream();
  if (format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = config.command;
    doc["config"] = config.params;
    doc["seed"] = config.seed;
    doc["rows"] = Json::array();
    for (const ScanCell& cell : cells) doc["rows"].push_back(cell_json(cell, globals.timing));
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# schema_version " << kSchemaVersion << '\n';
  write_csv_header(out);
  for (const ScanCell& cell : cells) write_csv_row(out, cell, globals.timing);
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw UsageError(std::string("--") + what + ": expected a fraction a/b, got '" + text + "'");
  }
}

std::vector<Rational> rational_list(const std::vector<std::string>& texts, const char* what) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(rational_arg(t, what));
  return out;
}

const std::map<std::string, Graph>& builtin_patterns() {
  static const std::map<std::string, Graph> patterns = {
      {"edge", complete_graph(2)},  {"triangle", complete_graph(3)}, {"K4", complete_graph(4)},
      {"K5", complete_graph(5)},    {"C4", cycle_graph(4)},          {"C5", cycle_graph(5)},
      {"P3", path_graph(3)},
  };
  return patterns;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, g] : builtin_patterns()) names.push_back(name);
  return names;
}

Formula load_sentence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream text;
  text << in.rdbuf();
  return parse_formula(text.str());
}

struct PropertyArgs {
  std::string builtin;
  std::string formula_file;
};

void add_property_options(CLI::App* cmd, PropertyArgs& args) {
  auto* p = cmd->add_option("--property", args.builtin, "Builtin subgraph property")
                ->check(CLI::IsMember(builtin_names()));
  auto* f = cmd->add_option("--formula", args.formula_file, "File holding a closed sentence");
  p->excludes(f);
}

GraphProperty resolve_property(const PropertyArgs& args, Json& params) {
  if (!args.formula_file.empty()) {
    const Formula f = load_sentence(args.formula_file);
    if (depth(f) > kFormulaDepthGuard) {
      throw CapacityError("formula depth " + std::to_string(depth(f)) + " exceeds the guard " +
                          std::to_string(kFormulaDepthGuard));
    }
    params["formula"] = to_string(f);
    auto compiled = std::make_shared<CompiledFormula>(f);
    return [compiled](const Graph& g) { return evaluate(g, *compiled); };
  }
  const std::string name = args.builtin.empty() ? "triangle" : args.builtin;
  params["property"] = name;
  const Graph pattern = builtin_patterns().at(name);
  return [pattern](const Graph& g) { return contains_copy(g, pattern); };
}

// --- density / pair --------------------------------------------------------

void run_density(const Globals& globals, const std::string& path) {
  RunConfig config{"density", {{"graph", path}}, globals.seed};
  const Graph g = load_graph(path);
  Json r;
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  r["rho"] = to_string(density(g));
  const DensestSubset best = max_density(g);
  r["rhomax"] = to_string(best.density);
  r["strictly_balanced"] = is_strictly_balanced(g);
  if (g.vertex_count() <= kAutomorphismCap) r["aut"] = automorphism_count(g);
  r["densest"] = best.vertices;
  emit_record(globals, config, r);
}

void run_pair(const Globals& globals, const std::string& path, const std::string& alpha_text) {
  RunConfig config{"pair", {{"pair", path}}, globals.seed};
  const RootedPair pair = load_pair(path);
  const RelCounts counts = rel_counts(pair);
  Json r;
  r["v_rel"] = counts.vertices;
  r["e_rel"] = counts.edges;
  if (counts.vertices > 0) {
    r["rho"] = to_string(rel_density(pair));
    r["rhomax"] = to_string(max_rel_density(pair).density);
    r["strictly_balanced"] = is_strictly_balanced_pair(pair);
    try {
      r["e_min"] = e_min(pair);
    } catch (const DomainError&) {
      r["e_min"] = "undefined";
    }
  }
  if (!alpha_text.empty()) {
    const Alpha alpha(rational_arg(alpha_text, "alpha"));
    config.params["alpha"] = to_string(alpha.value());
    r["f_alpha"] = to_string(f_alpha(pair, alpha));
    if (counts.vertices > 0) r["alpha_safe"] = is_alpha_safe(pair, alpha);
  }
  emit_record(globals, config, r);
}

// --- scan / mc / poisson -----------------------------------------------------

struct ScanArgs {
  PropertyArgs property;
  std::vector<std::size_t> n_values;
  std::vector<std::string> alphas;
  int theorem1_k = 0;
  std::vector<int> m_values;
  std::size_t trials = 0;
  std::string epsilon;
};

void run_scan(const Globals& globals, const ScanArgs& args) {
  RunConfig config{"scan", Json::object(), globals.seed};
  ScanConfig scan;
  scan.n_values = args.n_values;
  scan.trials = args.trials;
  scan.seed = globals.seed;
  if (args.theorem1_k > 0) {
    if (args.m_values.empty()) throw UsageError("--theorem1-k needs --m");
    for (int m : args.m_values) {
      const Rational a = theorem1_alpha(args.theorem1_k, m);
      if (a < 1) scan.alphas.push_back(a);
    }
    if (scan.alphas.empty()) throw UsageError("no alpha of the family lies below 1");
    config.params["theorem1_k"] = args.theorem1_k;
    config.params["m"] = args.m_values;
  } else {
    if (args.alphas.empty()) throw UsageError("scan needs --alpha or --theorem1-k");
    scan.alphas = rational_list(args.alphas, "alpha");
  }
  if (!args.epsilon.empty()) scan.epsilon = rational_arg(args.epsilon, "epsilon");
  const GraphProperty property = resolve_property(args.property, config.params);
  config.params["n"] = args.n_values;
  config.params["trials"] = args.trials;
  emit_cells(globals, config, threshold_scan(scan, property));
}

struct McArgs {
  PropertyArgs property;
  std::size_t n = 0;
  std::string alpha;
  std::optional<double> p;
  std::size_t trials = 0;
};

void run_mc(const Globals& globals, const McArgs& args) {
  RunConfig config{"mc", Json::object(), globals.seed};
  SampleSpec spec;
  spec.n = args.n;
  spec.seed = globals.seed;
  spec.trials = args.trials;
  Rational exponent(0);
  if (args.p) {
    spec.p_mode = ExplicitP{*args.p};
  } else {
    if (args.alpha.empty()) throw UsageError("mc needs --alpha or --p");
    exponent = rational_arg(args.alpha, "alpha");
    if (exponent <= 0) throw UsageError("--alpha must be positive");
    spec.p_mode = PowerLaw{exponent};
  }
  const GraphProperty property = resolve_property(args.property, config.params);
  config.params["n"] = args.n;
  config.params["trials"] = args.trials;
  const Estimate e = mc_estimate(spec, property);
  const std::string format = globals.format.empty() ? "csv" : globals.format;
  if (format == "text") {
    Json r = cell_json({args.n, exponent, e}, globals.timing);
    emit_record(globals, config, r);
    return;
  }
  emit_cells(globals, config, {ScanCell{args.n, exponent, e}});
}

void run_poisson(const Globals& globals, const PropertyArgs& pattern_args, const std::string& graph_file,
                 std::size_t n, std::size_t trials) {
  RunConfig config{"poisson", {{"n", n}, {"trials", trials}}, globals.seed};
  Graph pattern;
  if (!graph_file.empty()) {
    pattern = load_graph(graph_file);
    config.params["graph"] = graph_file;
  } else {
    const std::string name = pattern_args.builtin.empty() ? "triangle" : pattern_args.builtin;
    pattern = builtin_patterns().at(name);
    config.params["pattern"] = name;
  }
  const PoissonReport rep = poisson_check(SampleSpec{n, ExplicitP{}, globals.seed, trials}, pattern);
  Json r;
  r["n"] = rep.n;
  r["trials"] = rep.trials;
  r["exponent"] = to_string(rep.exponent);
  r["p"] = rep.p;
  r["automorphisms"] = rep.automorphisms;
  r["lambda"] = rep.lambda;
  for (std::size_t b = 0; b < 4; ++b) r["observed_" + std::to_string(b)] = rep.observed[b];
  for (std::size_t b = 0; b < 4; ++b) r["expected_" + std::to_string(b)] = rep.expected[b];
  r["mean"] = rep.mean;
  r["chi_square"] = rep.chi_square;
  r["p_value"] = rep.p_value;
  r["containing"] = rep.containing;
  r["containment_fraction"] = rep.containment_fraction;
  emit_record(globals, config, r);
}

// --- witness / sset-check ----------------------------------------------------

void run_witness(const Globals& globals, int theorem, int k, int m, const std::string& out_dir) {
  RunConfig config{"witness", {{"theorem", theorem}, {"k", k}, {"m", m}}, globals.seed};
  const Witness w = theorem == 1 ? build_theorem1_witness(k, m) : build_theorem2_witness(k, m);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    save_graph(std::filesystem::path(out_dir) / "X.graph", w.x);
    save_graph(std::filesystem::path(out_dir) / "Y.graph", w.y);
    config.params["out_dir"] = out_dir;
  }
  const RootedPair pair = w.pair();
  Json r;
  r["alpha"] = to_string(w.alpha);
  r["x_vertices"] = w.x.vertex_count();
  r["x_edges"] = w.x.edge_count();
  r["y_vertices"] = w.y.vertex_count();
  r["y_edges"] = w.y.edge_count();
  r["inv_rho_x"] = to_string(1 / density(w.x));
  r["pair_density"] = to_string(rel_density(pair));
  r["x_strictly_balanced"] = is_strictly_balanced_uncapped(w.x);
  r["pair_strictly_balanced"] = is_strictly_balanced_pair_uncapped(pair);
  emit_record(globals, config, r);
}

MembershipCaps parse_caps(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--caps: expected three integers s,p,r, got '" + text + "'");
    }
  }
  if (parts.size() != 3) throw UsageError("--caps: expected three integers s,p,r");
  return {parts[0], parts[1], parts[2]};
}

struct SsetArgs {
  std::string graph;
  std::string alpha;
  int k = 0;
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::string caps;
};

void run_sset(const Globals& globals, const SsetArgs& args) {
  RunConfig config{"sset-check", {{"graph", args.graph}}, globals.seed};
  const Graph g = load_graph(args.graph);
  std::optional<Alpha> alpha;
  if (args.k > 0) {
    alpha = Alpha::from_game_parameters(args.k, args.a, args.b);
  } else if (!args.alpha.empty()) {
    alpha = Alpha(rational_arg(args.alpha, "alpha"));
  } else {
    throw UsageError("sset-check needs --alpha or --k/--a/--b");
  }
  const MembershipCaps caps = args.caps.empty() ? MembershipCaps{} : parse_caps(args.caps);
  config.params["alpha"] = to_string(alpha->value());
  config.params["caps"] = {caps.max_subgraph_v, caps.max_pattern_v, caps.max_root_v};
  const MembershipReport rep = check_S_membership(g, *alpha, caps);
  Json r;
  r["alpha"] = to_string(alpha->value());
  r["member"] = rep.member();
  for (int p = 1; p <= 3; ++p) r["property" + std::to_string(p)] = rep.passes(p);
  r["safe_patterns"] = rep.safe_patterns;
  r["constraints"] = rep.constraints;
  r["sparse_graphs"] = rep.sparse_graphs;
  r["failure_count"] = rep.failures.size();
  r["failures"] = Json::array();
  for (const auto& f : rep.failures) r["failures"].push_back({{"property", f.property}, {"witness", f.witness}});
  emit_record(globals, config, r);
  const std::string format = globals.format.empty() ? "text" : globals.format;
  if (format == "text" && globals.out.empty()) {
    for (const auto& f : rep.failures) std::cout << "failure property=" << f.property << ' ' << f.witness << '\n';
  }
}

// --- ef ------------------------------------------------------------------

void run_ef_solve(const Globals& globals, const std::string& g_file, const std::string& h_file,
                  std::size_t k) {
  RunConfig config{"ef solve", {{"g", g_file}, {"h", h_file}, {"k", k}}, globals.seed};
  GameSolver solver(load_graph(g_file), load_graph(h_file));
  Json r;
  r["winner"] = to_string(solver.value({}, k));
  r["k"] = k;
  r["positions"] = solver.memo_size();
  emit_record(globals, config, r);
}

struct CrosscheckArgs {
  std::size_t pairs = 200;
  std::size_t depth = 3;
  std::size_t sentences = 50;
  std::size_t max_v = 7;
  std::string battery;
};

std::vector<Formula> load_battery(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::vector<Formula> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in battery", line_no);
    }
  }
  return out;
}

void run_ef_crosscheck(const Globals& globals, const CrosscheckArgs& args) {
  RunConfig config{"ef crosscheck",
                   {{"pairs", args.pairs}, {"depth", args.depth}, {"max_v", args.max_v}},
                   globals.seed};
  std::vector<Formula> battery;
  if (!args.battery.empty()) {
    battery = load_battery(args.battery);
    config.params["battery"] = args.battery;
  } else {
    battery = random_sentence_battery(args.sentences, args.depth, globals.seed);
    config.params["sentences"] = args.sentences;
  }
  std::size_t duplicator = 0;
  std::size_t separating = 0;
  Json violations = Json::array();
  const auto pairs = random_graph_pairs(args.pairs, args.max_v, globals.seed);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const CrosscheckReport rep = crosscheck_ehrenfeucht(pairs[i].first, pairs[i].second, args.depth, battery);
    if (rep.value == Winner::DuplicatorWins) ++duplicator;
    separating += rep.separating;
    for (const auto& v : rep.violations) {
      violations.push_back({{"pair", i},
                            {"kind", v.kind == CrosscheckViolation::Kind::SeparatedDespiteDuplicatorWin
                                         ? "separated-despite-duplicator-win"
                                         : "solver-missed-separation"},
                            {"witness", to_string(v.witness)}});
    }
  }
  Json r;
  r["pairs"] = pairs.size();
  r["depth"] = args.depth;
  r["sentences"] = battery.size();
  r["duplicator_wins"] = duplicator;
  r["separating"] = separating;
  r["violation_count"] = violations.size();
  r["violations"] = violations;
  emit_record(globals, config, r);
}

void print_board(std::ostream& out, const char* name, const Graph& g) {
  out << name << " (" << g.vertex_count() << " vertices)\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ':';
    for (Vertex w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
}

// Reads one command line; nullopt at end of input.
std::optional<std::vector<std::string>> prompt(std::istream& in, std::ostream& out, const std::string& text) {
  out << text << std::flush;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  return split_tokens(line);
}

std::optional<Vertex> vertex_token(const std::string& token, const Graph& g) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(token, &used);
    if (used != token.size() || v >= g.vertex_count()) return std::nullopt;
    return static_cast<Vertex>(v);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

const char* board_name(Board b) { return b == Board::G ? "G" : "H"; }

int run_ef_play(const std::string& g_file, const std::string& h_file, std::size_t k,
                const std::string& side, const std::string& engine) {
  const Graph g = load_graph(g_file);
  const Graph h = load_graph(h_file);
  std::istream& in = std::cin;
  std::ostream& out = std::cout;
  print_board(out, "G", g);
  print_board(out, "H", h);
  GameState state(g, h, k);
  GameSolver solver(g, h);
  std::optional<ScriptedDuplicator> script;
  if (engine == "script") script.emplace(g, h, k);

  while (!state.finished()) {
    if (side == "spoiler") {
      auto tokens = prompt(in, out, "pick <graph> <vertex>> ");
      if (!tokens) throw UsageError("input ended before the game finished");
      if (tokens->size() != 3 || (*tokens)[0] != "pick" || ((*tokens)[1] != "G" && (*tokens)[1] != "H")) {
        out << "expected: pick G|H <vertex>\n";
        continue;
      }
      const Board board = (*tokens)[1] == "G" ? Board::G : Board::H;
      const auto v = vertex_token((*tokens)[2], state.graph(board));
      if (!v) {
        out << "no such vertex in " << board_name(board) << '\n';
        continue;
      }
      state.spoiler_pick(board, *v);
      if (state.finished()) break;
      std::optional<Vertex> reply;
      if (script) {
        reply = script->reply(state);
      } else {
        reply = solver.winning_reply(state.picks(), state.rounds_left(), *state.pending());
        if (!reply) reply = state.legal_replies().front();
      }
      state.duplicator_reply(*reply);
      out << "reply " << board_name(other(board)) << ' ' << *reply << '\n';
    } else {
      auto pick = solver.winning_pick(state.picks(), state.rounds_left());
      if (!pick) {
        Vertex v = 0;
        while (v + 1 < g.vertex_count() &&
               std::any_of(state.picks().begin(), state.picks().end(), [v](const PickPair& p) { return p.g == v; })) {
          ++v;
        }
        pick = PendingPick{Board::G, v};
      }
      state.spoiler_pick(pick->board, pick->vertex);
      out << "pick " << board_name(pick->board) << ' ' << pick->vertex << '\n';
      if (state.finished()) break;
      const Board target = other(pick->board);
      for (;;) {
        auto tokens = prompt(in, out, std::string("reply <vertex of ") + board_name(target) + ">> ");
        if (!tokens) throw UsageError("input ended before the game finished");
        std::optional<Vertex> v;
        if (tokens->size() == 2 && (*tokens)[0] == "reply") v = vertex_token((*tokens)[1], state.graph(target));
        if (v && state.is_legal_reply(*v)) {
          state.duplicator_reply(*v);
          break;
        }
        out << "illegal reply\n";
      }
    }
  }
  out << "winner " << to_string(state.winner()) << '\n';
  return 0;
}

int exit_code_for(const std::exception& e) {
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    return exit_code_for(inner);
  }
  if (dynamic_cast<const CapacityError*>(&e)) return kExitCapacity;
  if (dynamic_cast<const ParseError*>(&e)) return kExitInput;
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random graph zero-one law laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--out", globals.out, "Write the report here instead of stdout");
  app.add_option("--format", globals.format, "Report format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--timing", globals.timing, "Report wall-clock times (breaks byte-identical reruns)");

  std::string graph_file;
  auto* density_cmd = app.add_subcommand("density", "Density, max density, balance, automorphisms");
  density_cmd->add_option("--graph", graph_file, "Graph file")->required();

  std::string pair_file;
  std::string pair_alpha;
  auto* pair_cmd = app.add_subcommand("pair", "Relative densities and safety of a rooted pair");
  pair_cmd->add_option("--pair", pair_file, "Pair file")->required();
  pair_cmd->add_option("--alpha", pair_alpha, "Exponent a/b in (0,1)");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Threshold scan over n and alpha");
  add_property_options(scan_cmd, scan.property);
  scan_cmd->add_option("--n", scan.n_values, "Graph sizes")->required()->delimiter(',');
  auto* scan_alpha = scan_cmd->add_option("--alpha", scan.alphas, "Exponents a/b")->delimiter(',');
  auto* scan_k = scan_cmd->add_option("--theorem1-k", scan.theorem1_k, "Use the theorem 1 family at this k");
  scan_cmd->add_option("--m", scan.m_values, "Family members m")->delimiter(',');
  scan_alpha->excludes(scan_k);
  scan_cmd->add_option("--trials", scan.trials, "Trials per cell")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--epsilon", scan.epsilon, "Sample alpha -/+ epsilon instead of alpha");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of one property");
  add_property_options(mc_cmd, mc.property);
  mc_cmd->add_option("--n", mc.n, "Graph size")->required()->check(CLI::PositiveNumber);
  auto* mc_alpha = mc_cmd->add_option("--alpha", mc.alpha, "p = n^-alpha");
  auto* mc_p = mc_cmd->add_option("--p", mc.p, "Explicit edge probability")->check(CLI::Range(0.0, 1.0));
  mc_alpha->excludes(mc_p);
  mc_cmd->add_option("--trials", mc.trials, "Trials")->required()->check(CLI::PositiveNumber);

  PropertyArgs poisson_pattern;
  std::string poisson_graph;
  std::size_t poisson_n = 0;
  std::size_t poisson_trials = 0;
  auto* poisson_cmd = app.add_subcommand("poisson", "Copy-count distribution against its Poisson limit");
  auto* pp = poisson_cmd->add_option("--pattern", poisson_pattern.builtin, "Builtin pattern")
                 ->check(CLI::IsMember(builtin_names()));
  poisson_cmd->add_option("--graph", poisson_graph, "Pattern graph file")->excludes(pp);
  poisson_cmd->add_option("--n", poisson_n, "Graph size")->required()->check(CLI::PositiveNumber);
  poisson_cmd->add_option("--trials", poisson_trials, "Trials")->required()->check(CLI::PositiveNumber);

  int theorem = 0;
  int wk = 0;
  int wm = 0;
  std::string out_dir;
  auto* witness_cmd = app.add_subcommand("witness", "Build the X, Y witness graphs");
  witness_cmd->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  witness_cmd->add_option("--k", wk, "Quantifier depth")->required();
  witness_cmd->add_option("--m", wm, "Family member")->required();
  witness_cmd->add_option("--out-dir", out_dir, "Directory for X.graph and Y.graph");

  SsetArgs sset;
  auto* sset_cmd = app.add_subcommand("sset-check", "Check the S-approximation properties at desk caps");
  sset_cmd->add_option("--graph", sset.graph, "Graph file")->required();
  auto* sa = sset_cmd->add_option("--alpha", sset.alpha, "Exponent a/b in (0,1)");
  auto* sk = sset_cmd->add_option("--k", sset.k, "Game parameter k (with --a, --b)");
  sset_cmd->add_option("--a", sset.a, "Game parameter a");
  sset_cmd->add_option("--b", sset.b, "Game parameter b");
  sa->excludes(sk);
  sset_cmd->add_option("--caps", sset.caps, "max_subgraph_v,max_pattern_v,max_root_v");

  auto* ef_cmd = app.add_subcommand("ef", "Ehrenfeucht game");
  ef_cmd->require_subcommand(1);
  ef_cmd->fallthrough();
  std::string g_file;
  std::string h_file;
  std::size_t ef_k = 0;
  auto* solve_cmd = ef_cmd->add_subcommand("solve", "Exact game value");
  solve_cmd->set_help_flag("--help", "Print this help message and exit");
  solve_cmd->add_option("--g", g_file, "Graph G")->required();
  solve_cmd->add_option("--h", h_file, "Graph H")->required();
  solve_cmd->add_option("--k", ef_k, "Rounds")->required();

  std::string side = "spoiler";
  std::string engine = "solver";
  auto* play_cmd = ef_cmd->add_subcommand("play", "Play against the engine on stdin");
  play_cmd->set_help_flag("--help", "Print this help message and exit");
  play_cmd->add_option("--g", g_file, "Graph G")->required();
  play_cmd->add_option("--h", h_file, "Graph H")->required();
  play_cmd->add_option("--k", ef_k, "Rounds")->required();
  play_cmd->add_option("--side", side, "Side taken by the human")->check(CLI::IsMember({"spoiler", "duplicator"}));
  play_cmd->add_option("--engine", engine, "Duplicator engine")->check(CLI::IsMember({"solver", "script"}));

  CrosscheckArgs cross;
  auto* cross_cmd = ef_cmd->add_subcommand("crosscheck", "Solver against a sentence battery on random pairs");
  cross_cmd->add_option("--pairs", cross.pairs, "Random pairs")->check(CLI::PositiveNumber);
  cross_cmd->add_option("--depth", cross.depth, "Rounds and maximal sentence depth")->check(CLI::PositiveNumber);
  cross_cmd->add_option("--battery", cross.battery, "File with one closed sentence per line");
  cross_cmd->add_option("--sentences", cross.sentences, "Generated battery size");
  cross_cmd->add_option("--max-v", cross.max_v, "Vertices per graph")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*density_cmd) run_density(globals, graph_file);
    if (*pair_cmd) run_pair(globals, pair_file, pair_alpha);
    if (*scan_cmd) run_scan(globals, scan);
    if (*mc_cmd) run_mc(globals, mc);
    if (*poisson_cmd) run_poisson(globals, poisson_pattern, poisson_graph, poisson_n, poisson_trials);
    if (*witness_cmd) run_witness(globals, theorem, wk, wm, out_dir);
    if (*sset_cmd) run_sset(globals, sset);
    if (*solve_cmd) run_ef_solve(globals, g_file, h_file, ef_k);
    if (*play_cmd) return run_ef_play(g_file, h_file, ef_k, side, engine);
    if (*cross_cmd) run_ef_crosscheck(globals, cross);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}
