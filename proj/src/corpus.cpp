#include "isolab/corpus.hpp"
#include "isolab/errors.hpp"
#include "isolab/families.hpp"
#include "isolab/graph_io.hpp"
#include "isolab/random_regular.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

namespace isolab {

namespace {

// Bit of the pair (i, j), i < j, in column-major upper-triangle order:
// (0,1), (0,2), (1,2), (0,3), ... The first pair is the most significant.
int pair_rank(int i, int j)
{
    return j * (j - 1) / 2 + i;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph & g) : g_(g), n_(g.order())
    {
        total_bits_ = n_ * (n_ - 1) / 2;
        std::vector<Vertex> by_degree(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            by_degree[static_cast<std::size_t>(v)] = v;
        std::ranges::stable_sort(by_degree, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (auto v : by_degree)
            slot_degree_.push_back(g.degree(v));
        used_.assign(static_cast<std::size_t>(n_), 0);
    }

    std::uint64_t run()
    {
        place(0, 0);
        return best_;
    }

private:
    void place(int position, std::uint64_t prefix)
    {
        if (position == n_) {
            if (! found_ || prefix > best_) {
                best_ = prefix;
                found_ = true;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || g_.degree(v) != slot_degree_[static_cast<std::size_t>(position)])
                continue;
            auto extended = prefix;
            for (int i = 0; i < position; ++i)
                extended = (extended << 1) | (g_.adjacent(order_[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            if (found_) {
                int bits = pair_rank(0, position + 1);
                auto best_prefix = best_ >> (total_bits_ - bits);
                if (extended < best_prefix)
                    continue;
            }
            used_[static_cast<std::size_t>(v)] = 1;
            order_.push_back(v);
            place(position + 1, extended);
            order_.pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
        }
    }

    const Graph & g_;
    int n_;
    int total_bits_;
    std::vector<int> slot_degree_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
    std::uint64_t best_ = 0;
    bool found_ = false;
};

// The graph whose canonical code is `code`, on n vertices.
Graph graph_from_code(int n, std::uint64_t code)
{
    std::vector<Edge> edges;
    int total = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> (total - 1 - pair_rank(i, j))) & 1u)
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

int parse_count(const std::string & text, const std::string & context)
{
    if (text.empty() || ! std::ranges::all_of(text, [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("expected a number, got \"" + text + "\" in corpus \"" + context + "\"");
    return std::stoi(text);
}

std::vector<std::string> split(const std::string & text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep))
        if (! part.empty())
            parts.push_back(part);
    return parts;
}

} // namespace

std::uint64_t canonical_code(const Graph & g)
{
    if (g.order() > max_canonical_order)
        throw ParameterError("canonical codes are limited to " + std::to_string(max_canonical_order) + " vertices");
    if (g.order() < 2)
        return 0;
    return Canonicalizer(g).run();
}

bool isomorphic(const Graph & a, const Graph & b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<Graph> all_graphs_of_order(int n)
{
    if (n < 0 || n > max_canonical_order)
        throw ParameterError("enumeration order out of range");
    if (n == 0)
        return {Graph()};
    if (n == 1)
        return {Graph(1, {})};

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::size_t, std::uint64_t>> keys;
    for (const auto & smaller : all_graphs_of_order(n - 1)) {
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            auto edges = smaller.edges();
            for (int v = 0; v < n - 1; ++v)
                if (mask & (1u << v))
                    edges.emplace_back(v, n - 1);
            Graph candidate(n, edges);
            auto code = canonical_code(candidate);
            if (seen.insert(code).second)
                keys.emplace_back(candidate.size(), code);
        }
    }
    std::ranges::sort(keys);
    std::vector<Graph> result;
    result.reserve(keys.size());
    for (auto [size, code] : keys)
        result.push_back(graph_from_code(n, code));
    return result;
}

std::vector<Graph> all_graphs_up_to(int max_order, bool connected_only)
{
    std::vector<Graph> result;
    for (int n = 1; n <= max_order; ++n)
        for (auto & g : all_graphs_of_order(n))
            if (! connected_only || is_connected(g))
                result.push_back(std::move(g));
    return result;
}

Graph named_graph(const std::string & name)
{
    if (name == "petersen") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, edges);
    }
    auto spec = parse_family(name);
    if (spec.is_scaled() || ! spec.pattern() || name.starts_with("file:"))
        throw ParseError("not a graph name: \"" + name + "\"");
    return *spec.pattern();
}

std::vector<NamedGraph> load_corpus(const std::string & spec)
{
    std::vector<NamedGraph> result;
    if (spec == "empty" || spec.empty())
        return result;

    auto exhaustive = [&](const std::string & prefix, bool connected) -> bool {
        for (const std::string sign : {"<=", "\xe2\x89\xa4"}) {
            auto head = prefix + sign;
            if (spec.starts_with(head)) {
                int k = parse_count(spec.substr(head.size()), spec);
                if (k > 7)
                    throw ParseError("exhaustive corpora are limited to 7 vertices: \"" + spec + "\"");
                int index = 0;
                for (auto & g : all_graphs_up_to(k, connected))
                    result.push_back({"g" + std::to_string(index++) + "[" + describe(g) + "]", std::move(g)});
                return true;
            }
        }
        return false;
    };
    if (exhaustive("all-connected-n", true) || exhaustive("all-n", false))
        return result;

    if (spec.starts_with("regular:")) {
        std::map<std::string, int> fields{{"n", 0}, {"d", 0}, {"count", 1}, {"seed", 0}};
        for (const auto & item : split(spec.substr(8), ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || ! fields.contains(item.substr(0, eq)))
                throw ParseError("bad field \"" + item + "\" in corpus \"" + spec + "\"");
            fields[item.substr(0, eq)] = parse_count(item.substr(eq + 1), spec);
        }
        for (int i = 0; i < fields["count"]; ++i) {
            auto seed = static_cast<std::uint64_t>(fields["seed"] + i);
            result.push_back({"regular(n=" + std::to_string(fields["n"]) + ",d=" + std::to_string(fields["d"])
                    + ",seed=" + std::to_string(seed) + ")",
                sample_regular(fields["n"], fields["d"], seed)});
        }
        return result;
    }
    if (spec.starts_with("named:")) {
        for (const auto & name : split(spec.substr(6), ','))
            result.push_back({name, named_graph(name)});
        return result;
    }
    if (spec.starts_with("files:")) {
        for (const auto & path : split(spec.substr(6), ','))
            result.push_back({path, read_graph_file(path)});
        return result;
    }
    throw ParseError("unknown corpus \"" + spec + "\"");
}

} // namespace isolab
