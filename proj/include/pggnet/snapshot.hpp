#pragma once

#include <iosfwd>
#include <string>

#include "pggnet/graph.hpp"

namespace pggnet {

/// Edge list: one "u v" line per edge, u < v, NodeIds in decimal.
void write_edge_list(const Graph& graph, std::ostream& out);

/// Node table CSV with header `id,strategy,fitness`; strategy is C or D.
void write_node_table(const Graph& graph, std::ostream& out);

/// Parses an edge list. Blank lines and lines starting with '#' are skipped.
/// Nodes are created in first-seen order with fresh ids and Defect strategy;
/// only the topology is preserved. Throws ParseError with the line number on
/// malformed lines, self-edges, and duplicate edges.
Graph read_edge_list(std::istream& in);

std::string format_double(double value);

}  // namespace pggnet
