#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"

#include <string>
#include <vector>

namespace isolab {

Graph attach_rooted_copies(const Graph & g, const RootedPattern & rp)
{
    if (g.is_null())
        throw GraphError("C(G, F) needs a non-null G");
    const auto & f = rp.pattern;
    if (f.is_null())
        throw GraphError("C(G, F) needs a non-null pattern");
    if (rp.root < 0 || rp.root >= f.order())
        throw GraphError("root " + std::to_string(rp.root) + " is not a pattern vertex");

    int k = f.order();
    std::vector<int> rank(static_cast<std::size_t>(k));
    int next = 1;
    for (Vertex w = 0; w < k; ++w)
        rank[static_cast<std::size_t>(w)] = w == rp.root ? 0 : next++;

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(u * k, v * k);
    for (Vertex i = 0; i < g.order(); ++i)
        for (auto [a, b] : f.edges())
            edges.emplace_back(i * k + rank[static_cast<std::size_t>(a)], i * k + rank[static_cast<std::size_t>(b)]);
    return Graph(g.order() * k, edges);
}

Graph cartesian_product(const Graph & g, const Graph & f)
{
    if (g.is_null() || f.is_null())
        throw GraphError("the Cartesian product needs non-null factors");
    int k = f.order();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto [a, b] : f.edges())
            edges.emplace_back(v * k + a, v * k + b);
    for (auto [u, v] : g.edges())
        for (Vertex w = 0; w < k; ++w)
            edges.emplace_back(u * k + w, v * k + w);
    return Graph(g.order() * k, edges);
}

Graph subdivide(const Graph & g, int h)
{
    if (h < 0)
        throw ParameterError("subdivision count must be non-negative");
    std::vector<Edge> edges;
    int next = g.order();
    for (auto [u, v] : g.edges()) {
        Vertex previous = u;
        for (int i = 0; i < h; ++i) {
            edges.emplace_back(previous, next);
            previous = next++;
        }
        edges.emplace_back(previous, v);
    }
    return Graph(next, edges);
}

namespace {

void require_positive(int k, int q, int t)
{
    if (k < 1 || q < 1 || t < 1)
        throw ParameterError("k, q and t must all be at least 1");
}

// Appends a clique on `size` new vertices and returns its first vertex.
Vertex append_clique(int size, int & next, std::vector<Edge> & edges)
{
    Vertex first = next;
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            edges.emplace_back(first + a, first + b);
    next += size;
    return first;
}

} // namespace

Graph extremal_path_of_cliques(int k, int q, int t)
{
    require_positive(k, q, t);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i)
        edges.emplace_back(i, i + 1);
    int next = q;
    for (int i = 0; i < q; ++i) {
        auto w = append_clique(t * k, next, edges);
        edges.emplace_back(i, w);
    }
    return Graph(next, edges);
}

Graph extremal_H(int k, int q, int t)
{
    require_positive(k, q, t);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i)
        edges.emplace_back(i, i + 1);
    int next = q;
    for (int i = 0; i + 1 < q; ++i) {
        auto w = append_clique(t * k, next, edges);
        edges.emplace_back(i, w);
    }
    Vertex hub = q - 1;
    for (int i = 0; i < t; ++i) {
        auto x = append_clique(i == 0 ? k : k + 1, next, edges);
        edges.emplace_back(hub, x);
    }
    return Graph(next, edges);
}

} // namespace isolab
