#pragma once

// Brute-force reference computations. Graphs are adjacency bitmasks so
// nothing here goes through the library's search code.

#include "isolab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

struct Adj {
    int n = 0;
    std::vector<Mask> row;

    bool edge(int u, int v) const { return (row[static_cast<std::size_t>(u)] >> v) & 1u; }
};

inline Adj adj(const isolab::Graph & g)
{
    Adj a{g.order(), std::vector<Mask>(static_cast<std::size_t>(g.order()), 0)};
    for (auto [u, v] : g.edges()) {
        a.row[static_cast<std::size_t>(u)] |= Mask{1} << v;
        a.row[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    return a;
}

inline Mask full(int n)
{
    return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::vector<int> members(Mask m)
{
    std::vector<int> out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1u)
            out.push_back(v);
    return out;
}

inline Mask closed_nbhd(const Adj & a, Mask d)
{
    Mask out = d;
    for (int v : members(d))
        out |= a.row[static_cast<std::size_t>(v)];
    return out;
}

inline int edges_within(const Adj & a, Mask s)
{
    int twice = 0;
    for (int v : members(s))
        twice += std::popcount(a.row[static_cast<std::size_t>(v)] & s);
    return twice / 2;
}

inline int components_within(const Adj & a, Mask s)
{
    int count = 0;
    Mask left = s;
    while (left) {
        Mask reach = left & (~left + 1);
        Mask prev = 0;
        while (reach != prev) {
            prev = reach;
            for (int v : members(reach))
                reach |= a.row[static_cast<std::size_t>(v)] & s;
        }
        left &= ~reach;
        ++count;
    }
    return count;
}

/// Acyclic iff |E| = |V| - #components.
inline bool forest_within(const Adj & a, Mask s)
{
    return edges_within(a, s) == std::popcount(s) - components_within(a, s);
}

/// Whether the vertices of s can be ordered into a cycle (|s| >= 3).
inline bool hamiltonian_cycle_on(const Adj & a, Mask s)
{
    auto vs = members(s);
    if (vs.size() < 3)
        return false;
    int first = vs.front();
    std::vector<int> rest(vs.begin() + 1, vs.end());
    do {
        int prev = first;
        bool ok = true;
        for (int v : rest) {
            if (! a.edge(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && a.edge(prev, first))
            return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

/// Lengths of all cycles: a k-subset spans a cycle iff it has a Hamiltonian ordering.
inline std::set<int> cycle_lengths(const Adj & a)
{
    std::set<int> out;
    for (Mask s = 1; s <= full(a.n); ++s)
        if (std::popcount(s) >= 3 && hamiltonian_cycle_on(a, s))
            out.insert(std::popcount(s));
    return out;
}

/// Whether pattern p embeds (as a subgraph) into the vertices of s. Tries
/// every injective placement.
inline bool embeds_within(const Adj & p, const Adj & host, Mask s)
{
    auto vs = members(s);
    if (static_cast<int>(vs.size()) < p.n)
        return false;
    std::vector<int> image(static_cast<std::size_t>(p.n));
    std::vector<char> used(vs.size(), 0);
    std::function<bool(int)> place = [&](int i) {
        if (i == p.n)
            return true;
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (used[j])
                continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                if (p.edge(i, k) && ! host.edge(vs[j], image[static_cast<std::size_t>(k)]))
                    ok = false;
            if (! ok)
                continue;
            used[j] = 1;
            image[static_cast<std::size_t>(i)] = vs[j];
            if (place(i + 1))
                return true;
            used[j] = 0;
        }
        return false;
    };
    return place(0);
}

/// A family: either all cycles or one pattern, with multiplicity t.
struct Family {
    bool cycles = false;
    Adj pattern;
    int t = 1;
};

inline Family cycles_family(int t = 1)
{
    return {true, {}, t};
}

inline Family pattern_family(const isolab::Graph & f, int t = 1)
{
    return {false, adj(f), t};
}

/// Vertex sets of minimal members: subsets spanning a cycle, or subsets of
/// pattern order hosting the pattern.
inline std::vector<Mask> copy_supports(const Adj & host, const Family & fam, Mask alive)
{
    std::vector<Mask> out;
    for (Mask s = alive; s; s = (s - 1) & alive) {
        if (fam.cycles) {
            if (hamiltonian_cycle_on(host, s))
                out.push_back(s);
        }
        else if (std::popcount(s) == fam.pattern.n && embeds_within(fam.pattern, host, s))
            out.push_back(s);
    }
    return out;
}

/// Maximum number of disjoint members inside `alive`.
inline int packing(const Adj & host, const Family & fam, Mask alive)
{
    auto supports = copy_supports(host, fam, alive);
    int best = 0;
    std::function<void(std::size_t, Mask, int)> go = [&](std::size_t i, Mask used, int count) {
        best = std::max(best, count);
        for (std::size_t j = i; j < supports.size(); ++j)
            if (! (supports[j] & used))
                go(j + 1, used | supports[j], count + 1);
    };
    go(0, 0, 0);
    return best;
}

inline bool contains(const Adj & host, const Family & fam, Mask alive)
{
    if (fam.t == 1 && fam.cycles)
        return ! forest_within(host, alive);
    if (fam.t == 1) {
        for (Mask s = alive; s; s = (s - 1) & alive)
            if (std::popcount(s) == fam.pattern.n && embeds_within(fam.pattern, host, s))
                return true;
        return fam.pattern.n == 0;
    }
    return packing(host, fam, alive) >= fam.t;
}

/// Smallest k such that some k-subset satisfies `ok`.
inline int min_subset(int n, const std::function<bool(Mask)> & ok)
{
    for (int k = 0; k <= n; ++k)
        for (Mask s = 0; s <= full(n); ++s)
            if (std::popcount(s) == k && ok(s))
                return k;
    return -1;
}

inline int domination(const Adj & a)
{
    return min_subset(a.n, [&](Mask d) { return closed_nbhd(a, d) == full(a.n); });
}

inline int isolation(const Adj & a, const Family & fam)
{
    return min_subset(a.n, [&](Mask d) { return ! contains(a, fam, full(a.n) & ~closed_nbhd(a, d)); });
}

inline int hitting(const Adj & a, const Family & fam)
{
    return min_subset(a.n, [&](Mask s) { return ! contains(a, fam, full(a.n) & ~s); });
}

inline bool isomorphic(const Adj & a, const Adj & b)
{
    if (a.n != b.n)
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                ok = a.edge(u, v) == b.edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool isomorphic(const isolab::Graph & a, const isolab::Graph & b)
{
    return isomorphic(adj(a), adj(b));
}

inline bool bipartite(const Adj & a)
{
    for (Mask side = 0; side <= full(a.n); ++side) {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            ok = ! (a.row[static_cast<std::size_t>(u)] & (((side >> u) & 1u) ? side : full(a.n) & ~side));
        if (ok)
            return true;
    }
    return false;
}

/// Every graph on n labelled vertices, one per edge mask (n <= 5 keeps this small).
inline std::vector<isolab::Graph> labelled_graphs(int n)
{
    std::vector<isolab::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<isolab::Graph> out;
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        std::vector<isolab::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1u)
                edges.push_back(pairs[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace oracle
