#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "folab/graph_core/graph.hpp"

namespace folab {

// Text format: first content line `vertices <n>`, then `edge <u> <v>` lines.
// `#` starts a comment line; blank lines are ignored. ParseError carries the line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

// Splits a line into whitespace-separated tokens; shared with the pair reader.
std::vector<std::string> split_tokens(const std::string& line);
std::size_t parse_count(const std::string& token, std::size_t line);

}  // namespace folab
