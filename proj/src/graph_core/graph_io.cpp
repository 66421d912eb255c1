#include "folab/graph_core/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include "folab/graph_core/errors.hpp"

namespace folab {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected a nonnegative integer, got '" + token + "'", line);
  }
  return value;
}

Graph read_graph(std::istream& in) {
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "vertices") {
        throw ParseError("expected 'vertices <n>'", line_no);
      }
      n = parse_count(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 3 || tokens[0] != "edge") throw ParseError("expected 'edge <u> <v>'", line_no);
    const auto u = parse_count(tokens[1], line_no);
    const auto v = parse_count(tokens[2], line_no);
    if (u >= *n || v >= *n) throw ParseError("edge endpoint out of range", line_no);
    if (u == v) throw ParseError("loop edge", line_no);
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError("duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!n) throw ParseError("missing 'vertices <n>' line", line_no + 1);
  return Graph(*n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace folab
