#pragma once

#include <iosfwd>
#include <string>

#include "zforce/graph.hpp"

namespace zforce {

// Edge-list text format:
//   # comment
//   N <count>        optional, first non-comment line; declares isolated vertices
//   u v              one undirected edge per line, 0-based ids, single space
//
// Without an N line the vertex count is one more than the largest id seen.
// Removed vertices are not represented; writing a graph with tombstones
// yields the alive subgraph on the same id range.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace zforce
