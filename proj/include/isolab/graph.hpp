#pragma once

#include "isolab/budget.hpp"

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isolab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A simple undirected graph on vertices 0..order()-1.
///
/// Values are immutable once built. Edges are stored normalized (u < v) and
/// sorted, so two graphs compare equal exactly when they have the same order
/// and the same labelled edge set. The null graph (order 0) is a valid value.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on an out-of-range endpoint or a self-loop.
    /// Duplicate pairs (in either orientation) collapse to one edge.
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool is_null() const noexcept { return order_ == 0; }

    const std::vector<Edge> & edges() const noexcept { return edges_; }
    const std::vector<Vertex> & neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex u, Vertex v) const
    {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(v)] != 0;
    }

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint8_t> matrix_;
};

/// Same as the constructor; kept as a named entry point for callers that build
/// from parsed data.
Graph build_graph(int order, std::span<const Edge> edges);

/// A subset of the vertices of a graph of a given order. Members are kept
/// sorted and unique.
class VertexSet {
public:
    VertexSet() = default;

    /// Throws GraphError if a member is outside 0..bound_order-1.
    VertexSet(int bound_order, std::vector<Vertex> members);

    static VertexSet all(int bound_order);

    int bound_order() const noexcept { return bound_order_; }
    const std::vector<Vertex> & members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Copy with one extra member.
    VertexSet with(Vertex v) const;

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    int bound_order_ = 0;
    std::vector<Vertex> members_;
};

/// An induced subgraph together with the map from its vertices back to the
/// parent graph: to_parent[i] is the parent label of vertex i.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

struct DegreeProfile {
    int min_degree;
    int max_degree;
    bool is_regular;

    friend bool operator==(const DegreeProfile &, const DegreeProfile &) = default;
};

/// N[D]: D together with every vertex adjacent to a member of D.
VertexSet closed_neighborhood(const Graph & g, const VertexSet & d);

/// G - N[D], relabeled contiguously in increasing parent order.
Subgraph remove_closed_neighborhood(const Graph & g, const VertexSet & d);

/// G[S], relabeled contiguously in increasing parent order.
Subgraph induced(const Graph & g, const VertexSet & s);

/// G - S.
Subgraph remove_vertices(const Graph & g, const VertexSet & s);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph & g);

bool is_connected(const Graph & g);

/// Throws GraphError on the null graph.
DegreeProfile degree_profile(const Graph & g);

bool is_bipartite(const Graph & g);

bool is_forest(const Graph & g);

/// Lengths of all cycles of g (each cycle counted as a subgraph). Throws
/// ResourceError once more than `cap` cycles have been enumerated.
std::set<int> all_cycle_lengths(const Graph & g, std::uint64_t cap = default_cycle_cap);

/// Disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

/// Short human readable form, e.g. "n=3:0-1,0-2,1-2".
std::string describe(const Graph & g);

} // namespace isolab
