#pragma once

#include <iosfwd>
#include <string>

#include "lamps/graph.hpp"
#include "lamps/matching.hpp"

namespace lamps {

enum class Format { edgelist, dimacs };

/// Edge list: header "n m", then m lines "u v", 0-based, '#' comment lines.
/// DIMACS: "p edge n m", then m lines "e u v", 1-based, 'c' comment lines.
Graph parse_graph(std::istream& in, Format format);

/// Sniffs the format: a first content line starting with 'p' or 'c' means
/// DIMACS, anything else edge list.
Graph parse_graph_auto(std::istream& in);

void write_graph(std::ostream& out, const Graph& g, Format format);

/// Weighted edge list: "n m", then m lines "u v w" with w >= 0.
WeightedGraph parse_weighted_graph(std::istream& in);
void write_weighted_graph(std::ostream& out, const WeightedGraph& wg);

}  // namespace lamps
