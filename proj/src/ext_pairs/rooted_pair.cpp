#include "folab/ext_pairs/rooted_pair.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/graph_io.hpp"

namespace folab {

RootedPair::RootedPair(Graph big, VertexTuple roots, std::vector<Edge> small_edges)
    : big_(std::move(big)), roots_(std::move(roots)), small_edges_(std::move(small_edges)),
      root_index_(big_.vertex_count(), -1) {
  require_tuple(big_, roots_);
  for (std::size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i]] = static_cast<int>(i);
  std::sort(small_edges_.begin(), small_edges_.end());
  if (std::adjacent_find(small_edges_.begin(), small_edges_.end()) != small_edges_.end()) {
    throw DomainError("duplicate small edge");
  }
  for (const Edge& e : small_edges_) {
    if (e.u == e.v || e.v >= big_.vertex_count() || !is_root(e.u) || !is_root(e.v) ||
        !big_.adjacent(e.u, e.v)) {
      throw DomainError("small edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " is not an edge of the big graph between small vertices");
    }
  }
  for (Vertex x = 0; x < big_.vertex_count(); ++x)
    if (!is_root(x)) new_vertices_.push_back(x);
}

bool RootedPair::is_small_edge(Vertex a, Vertex b) const {
  return std::binary_search(small_edges_.begin(), small_edges_.end(), Edge(a, b));
}

std::vector<Edge> RootedPair::extra_root_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : big_.edges())
    if (is_root(e.u) && is_root(e.v) && !is_small_edge(e.u, e.v)) out.push_back(e);
  return out;
}

RootedPair induced_pair(Graph big, VertexTuple roots) {
  std::vector<std::uint8_t> in_roots(big.vertex_count(), 0);
  for (Vertex x : roots) {
    require_vertex(big, x);
    in_roots[x] = 1;
  }
  std::vector<Edge> small;
  for (const Edge& e : big.edges())
    if (in_roots[e.u] && in_roots[e.v]) small.push_back(e);
  return RootedPair(std::move(big), std::move(roots), std::move(small));
}

RootedPair read_pair(std::istream& in) {
  std::string graph_text;
  std::vector<Vertex> small;
  std::vector<Vertex> roots;
  std::vector<Edge> small_edges;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0] == "small") {
      if (tokens.size() != 2) throw ParseError("expected 'small <v>'", line_no);
      small.push_back(static_cast<Vertex>(parse_count(tokens[1], line_no)));
      graph_text += '\n';
    } else if (!tokens.empty() && tokens[0] == "root") {
      if (tokens.size() != 2) throw ParseError("expected 'root <v>'", line_no);
      roots.push_back(static_cast<Vertex>(parse_count(tokens[1], line_no)));
      graph_text += '\n';
    } else if (!tokens.empty() && tokens[0] == "smalledge") {
      if (tokens.size() != 3) throw ParseError("expected 'smalledge <u> <v>'", line_no);
      small_edges.emplace_back(static_cast<Vertex>(parse_count(tokens[1], line_no)),
                               static_cast<Vertex>(parse_count(tokens[2], line_no)));
      graph_text += '\n';
    } else {
      graph_text += line + '\n';
    }
  }
  std::istringstream graph_in(graph_text);
  Graph big = read_graph(graph_in);
  if (roots.empty()) {
    roots = small;
    std::sort(roots.begin(), roots.end());
  } else {
    auto a = roots;
    auto b = small;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!small.empty() && a != b) throw ParseError("root lines must list the small vertices", line_no);
  }
  try {
    return RootedPair(std::move(big), std::move(roots), std::move(small_edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no);
  }
}

RootedPair load_pair(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_pair(in);
}

void write_pair(std::ostream& out, const RootedPair& pair) {
  write_graph(out, pair.big());
  for (Vertex x : pair.roots()) out << "root " << x << '\n';
  for (const Edge& e : pair.small_edges()) out << "smalledge " << e.u << ' ' << e.v << '\n';
}

Alpha::Alpha(Rational value) : value_(value) {
  if (value_ <= 0 || value_ >= 1) throw DomainError("alpha must lie strictly between 0 and 1");
}

Alpha Alpha::from_game_parameters(int k, std::int64_t a, std::int64_t b) {
  if (k <= 3 || k > 40) throw DomainError("k must satisfy 3 < k <= 40");
  if (a <= 0 || b <= 0 || std::gcd(a, b) != 1) throw DomainError("a/b must be an irreducible positive fraction");
  const std::int64_t half = std::int64_t{1} << (k - 1);
  if (a < std::max<std::int64_t>(1, half - b) || a > half) {
    throw DomainError("a must lie in [max(1, 2^(k-1) - b), 2^(k-1)]");
  }
  return Alpha(Rational(1) - Rational(1) / (Rational(half) + Rational(a, b)));
}

}  // namespace folab
