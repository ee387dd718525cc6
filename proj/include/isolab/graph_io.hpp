#pragma once

#include "isolab/graph.hpp"

#include <iosfwd>
#include <string>

namespace isolab {

enum class GraphFormat { EdgeList, Dimacs, Auto };

/// Edge list: a header line "n m" followed by m lines "u v", 0-based.
Graph read_edge_list(std::istream & in);

/// DIMACS: "c" comment lines, one "p edge n m" header, "e u v" lines, 1-based.
Graph read_dimacs(std::istream & in);

/// Auto picks DIMACS when the first non-blank line starts with "c" or "p".
Graph read_graph(std::istream & in, GraphFormat format = GraphFormat::Auto);

/// Throws IoError if the file cannot be opened.
Graph read_graph_file(const std::string & path, GraphFormat format = GraphFormat::Auto);

void write_edge_list(std::ostream & out, const Graph & g);
void write_dimacs(std::ostream & out, const Graph & g);
void write_graph_file(const std::string & path, const Graph & g, GraphFormat format = GraphFormat::EdgeList);

} // namespace isolab
