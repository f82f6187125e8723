#ifndef PMSP_GRAPH_IO_HPP_
#define PMSP_GRAPH_IO_HPP_

#include <string>

#include "pmsp/graph.hpp"

namespace pmsp {

enum class GraphFormat { kGraph6, kEdgeList };

// graph6 per the public format specification (bit-exact, loop-free by
// construction). Accepts the optional ">>graph6<<" prefix; rejects bad
// characters, wrong lengths and nonzero padding bits, naming the byte.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// One "u v" pair per line, 0-based labels, optional first line "n <count>".
// Blank lines are ignored. Errors name the offending line.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace pmsp

#endif  // PMSP_GRAPH_IO_HPP_
