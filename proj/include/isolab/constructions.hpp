#pragma once

#include "isolab/graph.hpp"

namespace isolab {

/// A pattern graph with a distinguished root vertex.
struct RootedPattern {
    Graph pattern;
    Vertex root = 0;
};

/// C(G, F): one copy of F per vertex of G, each glued to that vertex at the
/// root. Layout: copy i occupies i*k .. i*k+k-1 (k = |V(F)|), the root first
/// and the remaining pattern vertices in increasing order, so vertex i of G
/// becomes i*k. Throws GraphError for a null G or pattern, or a bad root.
Graph attach_rooted_copies(const Graph & g, const RootedPattern & rp);

/// G □ F with (v, w) at v*|V(F)| + w. Throws GraphError on a null factor.
Graph cartesian_product(const Graph & g, const Graph & f);

/// S_h(G): every edge replaced by a path with h internal vertices. Original
/// vertices keep their labels; internal vertices follow in sorted edge order,
/// h per edge, listed from the smaller endpoint towards the larger one.
Graph subdivide(const Graph & g, int h);

/// The graph G of the t-fold lower-bound construction: a path v_1..v_q on
/// vertices 0..q-1 and, for each i, a clique K_{tk} occupying the next tk
/// vertices whose first vertex w_i is joined to v_i. Order q(tk+1).
Graph extremal_path_of_cliques(int k, int q, int t);

/// The graph H of the same construction: the first q-1 clique gadgets of
/// extremal_path_of_cliques and, hanging from v_q, one clique of order k and
/// t-1 cliques of order k+1, each joined to v_q by its first vertex x_i.
Graph extremal_H(int k, int q, int t);

} // namespace isolab
