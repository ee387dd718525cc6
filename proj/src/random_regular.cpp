#include "isolab/random_regular.hpp"
#include "isolab/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace isolab {

bool is_good(int n, int d)
{
    if (n < 1 || d < 1)
        return false;
    return n > d && (static_cast<long long>(n) * d) % 2 == 0;
}

namespace {

// Fisher-Yates driven directly by the engine, so the mapping from seed to
// graph does not depend on the standard library's shuffle.
void shuffle_points(std::vector<int> & points, std::mt19937_64 & rng)
{
    for (std::size_t i = points.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng() % i);
        std::swap(points[i - 1], points[j]);
    }
}

Graph pairing_sample(int n, int d, std::uint64_t seed, std::uint64_t max_attempts)
{
    if (d == 0)
        return Graph(n, {});
    std::mt19937_64 rng(seed);
    std::vector<int> points;
    points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            points.push_back(v);

    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        shuffle_points(points, rng);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            auto u = points[i], v = points[i + 1];
            if (u == v || ! edges.emplace(std::min(u, v), std::max(u, v)).second)
                simple = false;
        }
        if (simple) {
            std::vector<Edge> list(edges.begin(), edges.end());
            return Graph(n, list);
        }
    }
    throw ResourceError("no simple pairing found in " + std::to_string(max_attempts) + " attempts");
}

Graph complement(const Graph & g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

} // namespace

Graph sample_regular(int n, int d, std::uint64_t seed, std::uint64_t max_attempts)
{
    if (! is_good(n, d))
        throw ParameterError("(" + std::to_string(n) + ", " + std::to_string(d) + ") is not a good pair");
    // Complementation is a bijection between d-regular and (n-1-d)-regular
    // graphs, so sampling the sparser side keeps the distribution uniform.
    if (2 * d > n - 1)
        return complement(pairing_sample(n, n - 1 - d, seed, max_attempts));
    return pairing_sample(n, d, seed, max_attempts);
}

} // namespace isolab
