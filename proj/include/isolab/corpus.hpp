#pragma once

#include "isolab/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isolab {

/// Largest order accepted by canonical_code (upper triangle fits in 64 bits).
inline constexpr int max_canonical_order = 11;

/// An isomorphism invariant that separates non-isomorphic graphs: the largest
/// upper-triangle adjacency code over all vertex orders that list vertices by
/// non-increasing degree. Throws ParameterError above max_canonical_order.
std::uint64_t canonical_code(const Graph & g);

/// canonical_code(a) == canonical_code(b), after comparing orders.
bool isomorphic(const Graph & a, const Graph & b);

/// One representative of every isomorphism class of graphs of order n,
/// sorted by (edge count, canonical code). Built by extending every class of
/// order n-1 by a vertex with each possible neighborhood.
std::vector<Graph> all_graphs_of_order(int n);

/// Classes of orders 1..max_order (connected ones only when asked).
std::vector<Graph> all_graphs_up_to(int max_order, bool connected_only);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// A graph by generator name (K4, P3, C5, S3) or the word "petersen".
/// Throws ParseError otherwise.
Graph named_graph(const std::string & name);

/// Corpus descriptions:
///   all-connected-n<=K / all-n<=K (also with the "≤" sign), K <= 7
///   regular:n=N,d=D,count=C,seed=S
///   named:K4,C5,petersen
///   files:a.el,b.el
///   empty
/// Throws ParseError on a bad description and IoError on an unreadable file.
std::vector<NamedGraph> load_corpus(const std::string & spec);

} // namespace isolab
