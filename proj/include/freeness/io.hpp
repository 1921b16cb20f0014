#pragma once

#include "freeness/graph.hpp"

#include <string>
#include <string_view>

namespace freeness {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Edge-list text: one "u v" pair per line, optional "n <count>" header line,
// '#' starts a comment line. Duplicate lines produce parallel edges.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6 (simple graphs only). An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view word);
std::string encode_graph6(const Graph& g);

/// Reads a graph file, choosing graph6 for a ".g6" extension and edge-list otherwise.
Graph read_graph_file(const std::string& path);

}  // namespace freeness
