#include "isolab/graph.hpp"
#include "isolab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <sstream>

namespace isolab {

std::uint64_t default_node_budget()
{
    if (const char * env = std::getenv("ISOLATION_LAB_NODE_BUDGET"); env != nullptr && *env != '\0') {
        char * end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0)
            return value;
    }
    return default_node_budget_value;
}

void SearchBudget::tick()
{
    if (++used_ > limit_)
        throw ResourceError("search node budget of " + std::to_string(limit_) + " exceeded");
}

Graph::Graph(int order, std::span<const Edge> edges) : order_(order)
{
    if (order < 0)
        throw GraphError("graph order must be non-negative");

    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v)
                + " for order " + std::to_string(order));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::ranges::sort(edges_);
    auto dup = std::ranges::unique(edges_);
    edges_.erase(dup.begin(), dup.end());

    auto n = static_cast<std::size_t>(order);
    adjacency_.resize(n);
    matrix_.assign(n * n, 0);
    for (auto [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
        matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
        matrix_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
    for (auto & list : adjacency_)
        std::ranges::sort(list);
}

Graph::Graph(int order, std::initializer_list<Edge> edges) : Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph build_graph(int order, std::span<const Edge> edges)
{
    return Graph(order, edges);
}

VertexSet::VertexSet(int bound_order, std::vector<Vertex> members) : bound_order_(bound_order), members_(std::move(members))
{
    std::ranges::sort(members_);
    auto dup = std::ranges::unique(members_);
    members_.erase(dup.begin(), dup.end());
    if (! members_.empty() && (members_.front() < 0 || members_.back() >= bound_order_))
        throw GraphError("vertex set member out of range for order " + std::to_string(bound_order_));
}

VertexSet VertexSet::all(int bound_order)
{
    std::vector<Vertex> members(static_cast<std::size_t>(bound_order));
    for (int v = 0; v < bound_order; ++v)
        members[static_cast<std::size_t>(v)] = v;
    return VertexSet(bound_order, std::move(members));
}

bool VertexSet::contains(Vertex v) const
{
    return std::ranges::binary_search(members_, v);
}

VertexSet VertexSet::with(Vertex v) const
{
    auto members = members_;
    members.push_back(v);
    return VertexSet(bound_order_, std::move(members));
}

namespace {

void require_indexes(const Graph & g, const VertexSet & s)
{
    if (s.bound_order() != g.order())
        throw GraphError("vertex set indexes a graph of order " + std::to_string(s.bound_order())
            + ", not " + std::to_string(g.order()));
}

Subgraph induced_by_mask(const Graph & g, const std::vector<char> & keep)
{
    std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), -1);
    Subgraph result;
    for (Vertex v = 0; v < g.order(); ++v)
        if (keep[static_cast<std::size_t>(v)]) {
            to_child[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.to_parent.size());
            result.to_parent.push_back(v);
        }

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        auto cu = to_child[static_cast<std::size_t>(u)], cv = to_child[static_cast<std::size_t>(v)];
        if (cu >= 0 && cv >= 0)
            edges.emplace_back(cu, cv);
    }
    result.graph = Graph(static_cast<int>(result.to_parent.size()), edges);
    return result;
}

} // namespace

VertexSet closed_neighborhood(const Graph & g, const VertexSet & d)
{
    require_indexes(g, d);
    std::vector<Vertex> members;
    for (auto v : d) {
        members.push_back(v);
        for (auto w : g.neighbors(v))
            members.push_back(w);
    }
    return VertexSet(g.order(), std::move(members));
}

Subgraph remove_closed_neighborhood(const Graph & g, const VertexSet & d)
{
    return remove_vertices(g, closed_neighborhood(g, d));
}

Subgraph induced(const Graph & g, const VertexSet & s)
{
    require_indexes(g, s);
    std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
    for (auto v : s)
        keep[static_cast<std::size_t>(v)] = 1;
    return induced_by_mask(g, keep);
}

Subgraph remove_vertices(const Graph & g, const VertexSet & s)
{
    require_indexes(g, s);
    std::vector<char> keep(static_cast<std::size_t>(g.order()), 1);
    for (auto v : s)
        keep[static_cast<std::size_t>(v)] = 0;
    return induced_by_mask(g, keep);
}

std::vector<VertexSet> components(const Graph & g)
{
    std::vector<VertexSet> result;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<Vertex> members{start}, stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v))
                if (! seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        result.emplace_back(g.order(), std::move(members));
    }
    return result;
}

bool is_connected(const Graph & g)
{
    return components(g).size() <= 1;
}

DegreeProfile degree_profile(const Graph & g)
{
    if (g.is_null())
        throw GraphError("degree profile of the null graph is undefined");
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi, lo == hi};
}

bool is_bipartite(const Graph & g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (colour[static_cast<std::size_t>(start)] != -1)
            continue;
        colour[static_cast<std::size_t>(start)] = 0;
        std::queue<Vertex> queue;
        queue.push(start);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : g.neighbors(v)) {
                auto & cw = colour[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push(w);
                }
                else if (cw == colour[static_cast<std::size_t>(v)])
                    return false;
            }
        }
    }
    return true;
}

bool is_forest(const Graph & g)
{
    return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

namespace {

// Simple paths start at their smallest vertex and only visit larger ones; a
// cycle is recorded when the path returns to the start, once per orientation
// filter (second vertex smaller than last).
struct CycleEnumerator {
    const Graph & g;
    std::uint64_t cap;
    std::uint64_t found = 0;
    std::set<int> lengths;
    std::vector<Vertex> path;
    std::vector<char> on_path;

    void extend(Vertex start)
    {
        auto last = path.back();
        for (auto w : g.neighbors(last)) {
            if (w == start && path.size() >= 3 && path[1] < last) {
                if (++found > cap)
                    throw ResourceError("cycle enumeration cap of " + std::to_string(cap) + " exceeded");
                lengths.insert(static_cast<int>(path.size()));
            }
            if (w <= start || on_path[static_cast<std::size_t>(w)])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            extend(start);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

} // namespace

std::set<int> all_cycle_lengths(const Graph & g, std::uint64_t cap)
{
    CycleEnumerator e{g, cap, 0, {}, {}, std::vector<char>(static_cast<std::size_t>(g.order()), 0)};
    for (Vertex s = 0; s < g.order(); ++s) {
        e.path = {s};
        e.on_path[static_cast<std::size_t>(s)] = 1;
        e.extend(s);
        e.on_path[static_cast<std::size_t>(s)] = 0;
    }
    return e.lengths;
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

std::string describe(const Graph & g)
{
    std::ostringstream out;
    out << "n=" << g.order() << ":";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out << (first ? "" : ",") << u << "-" << v;
        first = false;
    }
    return out.str();
}

} // namespace isolab
