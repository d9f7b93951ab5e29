#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mwist/graph.hpp"

namespace mwist {

// Text format: `n m`, then n weight lines, then m `u v` lines (0-based).
// Blank lines and anything after `#` are ignored. Throws parse_error.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Parse plus the connectivity requirement (disconnected_error).
Graph load_instance(const std::filesystem::path& path);

// The comment lines (without the leading `#`) in order of appearance.
std::vector<std::string> read_comments(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string graph_to_string(const Graph& g, const std::vector<std::string>& comments = {});
void save_graph(const std::filesystem::path& path, const Graph& g,
                const std::vector<std::string>& comments = {});

// A spanning tree written as a graph over the same vertices and weights, so
// the output of solve parses with the same loader.
Graph tree_as_graph(const Graph& g, const SpanningTree& t);

}  // namespace mwist
