#include "isolab/families.hpp"
#include "isolab/errors.hpp"
#include "isolab/graph_io.hpp"
#include "isolab/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <queue>
#include <set>

namespace isolab {

Graph generator_graph(GeneratorKind kind, int k)
{
    if (k < 1)
        throw ParameterError("generator size must be at least 1");
    std::vector<Edge> edges;
    switch (kind) {
    case GeneratorKind::Clique:
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                edges.emplace_back(u, v);
        return Graph(k, edges);
    case GeneratorKind::Path:
        for (int v = 0; v + 1 < k; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(k, edges);
    case GeneratorKind::Cycle:
        if (k < 3)
            throw ParameterError("a cycle needs at least 3 vertices");
        for (int v = 0; v < k; ++v)
            edges.emplace_back(v, (v + 1) % k);
        return Graph(k, edges);
    case GeneratorKind::Star:
        for (int v = 1; v <= k; ++v)
            edges.emplace_back(0, v);
        return Graph(k + 1, edges);
    }
    throw ParameterError("unknown generator kind");
}

FamilySpec::FamilySpec(Base base, int t) : base_(std::move(base)), t_(t)
{
    if (auto * single = std::get_if<SinglePattern>(&base_))
        pattern_ = single->pattern;
    else if (auto * gen = std::get_if<Generator>(&base_))
        pattern_ = generator_graph(gen->kind, gen->k);
}

FamilySpec FamilySpec::single(Graph pattern)
{
    if (pattern.is_null())
        throw ParameterError("a family pattern must not be the null graph");
    return FamilySpec(SinglePattern{std::move(pattern)}, 1);
}

FamilySpec FamilySpec::generator(GeneratorKind kind, int k)
{
    return FamilySpec(Generator{kind, k}, 1);
}

FamilySpec FamilySpec::all_cycles()
{
    return FamilySpec(AllCycles{}, 1);
}

FamilySpec FamilySpec::scaled(int t, const FamilySpec & inner)
{
    if (t < 1)
        throw ParameterError("multiplicity t must be at least 1");
    auto result = inner;
    result.t_ = inner.t_ * t;
    return result;
}

FamilySpec FamilySpec::unscaled() const
{
    auto result = *this;
    result.t_ = 1;
    return result;
}

int FamilySpec::min_member_order() const
{
    return pattern_ ? pattern_->order() : 3;
}

std::string FamilySpec::to_string() const
{
    std::string base;
    if (auto * gen = std::get_if<Generator>(&base_)) {
        static constexpr char letters[] = {'K', 'P', 'C', 'S'};
        base = letters[static_cast<int>(gen->kind)] + std::to_string(gen->k);
    }
    else if (is_all_cycles())
        base = "cycles";
    else
        base = "pattern(" + describe(*pattern_) + ")";
    return t_ == 1 ? base : std::to_string(t_) + "*" + base;
}

FamilySpec parse_family(const std::string & text)
{
    auto trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);

    int t = 1;
    std::string base = trimmed;
    if (auto star = trimmed.find('*'); star != std::string::npos) {
        auto count = trimmed.substr(0, star);
        base = trimmed.substr(star + 1);
        if (count.empty() || ! std::ranges::all_of(count, [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("bad multiplicity \"" + count + "\" in family \"" + text + "\"");
        t = std::stoi(count);
        if (t < 1)
            throw ParseError("multiplicity must be at least 1 in family \"" + text + "\"");
    }

    auto wrap = [t](FamilySpec spec) { return FamilySpec::scaled(t, spec); };

    if (base == "cycles")
        return wrap(FamilySpec::all_cycles());
    if (base.starts_with("file:")) {
        auto path = base.substr(5);
        if (path.empty())
            throw ParseError("empty pattern path in family \"" + text + "\"");
        auto pattern = read_graph_file(path);
        if (pattern.is_null())
            throw ParseError("pattern file \"" + path + "\" describes the null graph");
        return wrap(FamilySpec::single(std::move(pattern)));
    }
    if (base.size() >= 2 && std::ranges::all_of(base.substr(1), [](unsigned char c) { return std::isdigit(c); })) {
        int k = std::stoi(base.substr(1));
        GeneratorKind kind;
        switch (base[0]) {
        case 'K': kind = GeneratorKind::Clique; break;
        case 'P': kind = GeneratorKind::Path; break;
        case 'C': kind = GeneratorKind::Cycle; break;
        case 'S': kind = GeneratorKind::Star; break;
        default: throw ParseError("unknown family \"" + base + "\"");
        }
        if (k < 1 || (kind == GeneratorKind::Cycle && k < 3))
            throw ParseError("size out of range in family \"" + base + "\"");
        return wrap(FamilySpec::generator(kind, k));
    }
    throw ParseError("unknown family \"" + base + "\"");
}

namespace {

// Backtracking subgraph monomorphism. Pattern vertices are placed in BFS
// order so that every vertex after the first of its component has a placed
// neighbor whose image restricts the candidates.
class Matcher {
public:
    Matcher(const Graph & pattern, const Graph & host, const VertexMask & alive, SearchBudget & budget, int anchor_pattern,
        Vertex anchor_host)
        : pattern_(pattern), host_(host), alive_(alive), budget_(budget), anchor_host_(anchor_host)
    {
        auto n = static_cast<std::size_t>(host.order());
        alive_degree_.assign(n, 0);
        for (Vertex v = 0; v < host.order(); ++v)
            if (alive_[static_cast<std::size_t>(v)])
                for (auto w : host.neighbors(v))
                    alive_degree_[static_cast<std::size_t>(v)] += alive_[static_cast<std::size_t>(w)] ? 1 : 0;
        used_.assign(n, 0);
        image_.assign(static_cast<std::size_t>(pattern.order()), -1);
        build_order(anchor_pattern);
    }

    void run(const std::function<bool(const std::vector<Vertex> &)> & visit)
    {
        visit_ = &visit;
        stopped_ = false;
        place(0);
    }

private:
    void build_order(int anchor)
    {
        auto k = static_cast<std::size_t>(pattern_.order());
        std::vector<char> seen(k, 0);
        auto bfs = [&](int root) {
            std::queue<int> queue;
            queue.push(root);
            seen[static_cast<std::size_t>(root)] = 1;
            while (! queue.empty()) {
                int p = queue.front();
                queue.pop();
                order_.push_back(p);
                for (auto q : pattern_.neighbors(p))
                    if (! seen[static_cast<std::size_t>(q)]) {
                        seen[static_cast<std::size_t>(q)] = 1;
                        queue.push(q);
                    }
            }
        };
        if (anchor >= 0)
            bfs(anchor);
        while (order_.size() < k) {
            int best = -1;
            for (int p = 0; p < pattern_.order(); ++p)
                if (! seen[static_cast<std::size_t>(p)] && (best < 0 || pattern_.degree(p) > pattern_.degree(best)))
                    best = p;
            bfs(best);
        }

        std::vector<int> position(k);
        for (std::size_t i = 0; i < k; ++i)
            position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        earlier_.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            for (auto q : pattern_.neighbors(order_[i]))
                if (position[static_cast<std::size_t>(q)] < static_cast<int>(i))
                    earlier_[i].push_back(q);
        anchored_ = anchor >= 0;
    }

    bool fits(std::size_t depth, Vertex v) const
    {
        auto vi = static_cast<std::size_t>(v);
        if (! alive_[vi] || used_[vi])
            return false;
        if (alive_degree_[vi] < pattern_.degree(order_[depth]))
            return false;
        for (auto q : earlier_[depth])
            if (! host_.adjacent(image_[static_cast<std::size_t>(q)], v))
                return false;
        return true;
    }

    void assign(std::size_t depth, Vertex v)
    {
        budget_.tick();
        image_[static_cast<std::size_t>(order_[depth])] = v;
        used_[static_cast<std::size_t>(v)] = 1;
        place(depth + 1);
        used_[static_cast<std::size_t>(v)] = 0;
        image_[static_cast<std::size_t>(order_[depth])] = -1;
    }

    void place(std::size_t depth)
    {
        if (stopped_)
            return;
        if (depth == order_.size()) {
            if (! (*visit_)(image_))
                stopped_ = true;
            return;
        }
        if (depth == 0 && anchored_) {
            if (anchor_host_ >= 0 && anchor_host_ < host_.order() && fits(0, anchor_host_))
                assign(0, anchor_host_);
            return;
        }
        if (! earlier_[depth].empty()) {
            auto parent = image_[static_cast<std::size_t>(earlier_[depth].front())];
            for (auto v : host_.neighbors(parent)) {
                if (stopped_)
                    return;
                if (fits(depth, v))
                    assign(depth, v);
            }
        }
        else
            for (Vertex v = 0; v < host_.order(); ++v) {
                if (stopped_)
                    return;
                if (fits(depth, v))
                    assign(depth, v);
            }
    }

    const Graph & pattern_;
    const Graph & host_;
    const VertexMask & alive_;
    SearchBudget & budget_;
    Vertex anchor_host_;
    bool anchored_ = false;
    std::vector<int> alive_degree_;
    std::vector<char> used_;
    std::vector<Vertex> image_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_;
    const std::function<bool(const std::vector<Vertex> &)> * visit_ = nullptr;
    bool stopped_ = false;
};

// Shortest cycle of the alive part, by BFS from every root. At the global
// minimum the two tree paths meeting at the closing edge share only the root.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph & g, const VertexMask & alive, SearchBudget & budget)
{
    auto n = static_cast<std::size_t>(g.order());
    int best = INT_MAX;
    std::vector<Vertex> best_cycle;
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (! alive[static_cast<std::size_t>(root)])
            continue;
        budget.tick();
        std::ranges::fill(dist, -1);
        std::ranges::fill(parent, -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        bool done = false;
        while (! queue.empty() && ! done) {
            auto u = queue.front();
            queue.pop();
            if (2 * dist[static_cast<std::size_t>(u)] + 1 >= best)
                break;
            for (auto w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (! alive[wi] || w == parent[static_cast<std::size_t>(u)])
                    continue;
                if (dist[wi] == -1) {
                    dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[wi] = u;
                    queue.push(w);
                }
                else {
                    int length = dist[static_cast<std::size_t>(u)] + dist[wi] + 1;
                    if (length < best) {
                        best = length;
                        best_cycle.clear();
                        for (auto x = u; x != -1; x = parent[static_cast<std::size_t>(x)])
                            best_cycle.push_back(x);
                        for (auto x = w; x != root; x = parent[static_cast<std::size_t>(x)])
                            best_cycle.push_back(x);
                        if (best == 3)
                            done = true;
                    }
                }
            }
        }
        if (best == 3)
            break;
    }
    if (best_cycle.empty())
        return std::nullopt;
    std::ranges::sort(best_cycle);
    return best_cycle;
}

// Every chordless cycle of the alive part through v, as sorted vertex sets.
void chordless_cycles_through(const Graph & g, const VertexMask & alive, Vertex v, SearchBudget & budget,
    std::vector<std::vector<Vertex>> & out)
{
    std::vector<Vertex> path{v};
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    on_path[static_cast<std::size_t>(v)] = 1;

    std::function<void()> extend = [&]() {
        budget.tick();
        auto last = path.back();
        for (auto w : g.neighbors(last)) {
            auto wi = static_cast<std::size_t>(w);
            if (! alive[wi] || on_path[wi])
                continue;
            // w may only touch `last` among the interior of the path, and v
            // only when it closes the cycle.
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord)
                continue;
            if (path.size() >= 2 && g.adjacent(w, v)) {
                if (path[1] < w) {
                    auto cycle = path;
                    cycle.push_back(w);
                    std::ranges::sort(cycle);
                    out.push_back(std::move(cycle));
                }
                continue;
            }
            on_path[wi] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            on_path[wi] = 0;
        }
    };
    extend();
}

// Distinct vertex sets of base-family copies through v.
std::vector<std::vector<Vertex>> copies_through(const Graph & g, const VertexMask & alive, const FamilySpec & base,
    Vertex v, SearchBudget & budget)
{
    std::vector<std::vector<Vertex>> result;
    if (base.is_all_cycles()) {
        chordless_cycles_through(g, alive, v, budget, result);
    }
    else {
        const auto & pattern = *base.pattern();
        std::set<std::vector<Vertex>> seen;
        for (int p = 0; p < pattern.order(); ++p)
            for_each_embedding(pattern, g, alive, budget,
                [&](const std::vector<Vertex> & image) {
                    auto key = image;
                    std::ranges::sort(key);
                    seen.insert(std::move(key));
                    return true;
                },
                p, v);
        result.assign(seen.begin(), seen.end());
    }
    std::ranges::sort(result, [](const auto & a, const auto & b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return result;
}

struct Packer {
    const Graph & g;
    const FamilySpec & base;
    int stop_at;
    SearchBudget & budget;
    int min_order;
    int best = 0;
    std::vector<std::vector<Vertex>> current, best_copies;

    bool done() const { return best >= stop_at; }

    void search(VertexMask & alive, int alive_count)
    {
        budget.tick();
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_copies = current;
        }
        if (done() || static_cast<int>(current.size()) + alive_count / min_order <= best)
            return;
        auto copy = find_family_copy(g, alive, base, budget);
        if (! copy)
            return;

        // Branch on the copy vertex with the fewest alive neighbors.
        Vertex pivot = copy->front();
        int pivot_degree = INT_MAX;
        for (auto v : *copy) {
            int d = 0;
            for (auto w : g.neighbors(v))
                d += alive[static_cast<std::size_t>(w)] ? 1 : 0;
            if (d < pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }

        for (const auto & taken : copies_through(g, alive, base, pivot, budget)) {
            for (auto v : taken)
                alive[static_cast<std::size_t>(v)] = 0;
            current.push_back(taken);
            search(alive, alive_count - static_cast<int>(taken.size()));
            current.pop_back();
            for (auto v : taken)
                alive[static_cast<std::size_t>(v)] = 1;
            if (done())
                return;
        }

        alive[static_cast<std::size_t>(pivot)] = 0;
        search(alive, alive_count - 1);
        alive[static_cast<std::size_t>(pivot)] = 1;
    }
};

VertexMask all_alive(const Graph & g)
{
    return VertexMask(static_cast<std::size_t>(g.order()), 1);
}

} // namespace

std::optional<std::vector<Vertex>> find_embedding(const Graph & pattern, const Graph & host, const VertexMask & alive,
    SearchBudget & budget)
{
    std::optional<std::vector<Vertex>> found;
    for_each_embedding(pattern, host, alive, budget, [&](const std::vector<Vertex> & image) {
        found = image;
        return false;
    });
    return found;
}

void for_each_embedding(const Graph & pattern, const Graph & host, const VertexMask & alive, SearchBudget & budget,
    const std::function<bool(const std::vector<Vertex> &)> & visit, int anchor_pattern, Vertex anchor_host)
{
    if (pattern.order() > host.order())
        return;
    Matcher matcher(pattern, host, alive, budget, anchor_pattern, anchor_host);
    matcher.run(visit);
}

std::optional<std::vector<Vertex>> find_family_copy(const Graph & g, const VertexMask & alive, const FamilySpec & spec,
    SearchBudget & budget)
{
    if (spec.is_scaled()) {
        std::vector<std::vector<Vertex>> copies;
        auto base = spec.unscaled();
        if (packing_in(g, alive, base, spec.multiplicity(), budget, &copies) < spec.multiplicity())
            return std::nullopt;
        std::vector<Vertex> joined;
        for (const auto & c : copies)
            joined.insert(joined.end(), c.begin(), c.end());
        std::ranges::sort(joined);
        return joined;
    }
    if (spec.is_all_cycles())
        return shortest_cycle(g, alive, budget);

    auto image = find_embedding(*spec.pattern(), g, alive, budget);
    if (! image)
        return std::nullopt;
    std::ranges::sort(*image);
    return image;
}

int packing_in(const Graph & g, const VertexMask & alive, const FamilySpec & base, int stop_at, SearchBudget & budget,
    std::vector<std::vector<Vertex>> * copies)
{
    if (base.is_scaled())
        throw ParameterError("packing is defined for an unscaled family");
    auto working = alive;
    int alive_count = static_cast<int>(std::ranges::count_if(working, [](char c) { return c != 0; }));
    Packer packer{g, base, stop_at, budget, base.min_member_order(), 0, {}, {}};
    packer.search(working, alive_count);
    if (copies)
        *copies = packer.best_copies;
    return packer.best;
}

bool contains_family(const Graph & g, const FamilySpec & spec, std::uint64_t node_budget)
{
    SearchBudget budget(node_budget);
    auto alive = all_alive(g);
    if (spec.is_all_cycles() && ! spec.is_scaled())
        return ! is_forest(g);
    return find_family_copy(g, alive, spec, budget).has_value();
}

int packing_number(const Graph & g, const FamilySpec & spec, std::uint64_t node_budget)
{
    if (spec.is_scaled())
        throw ParameterError("packing_number expects an unscaled family, got " + spec.to_string());
    SearchBudget budget(node_budget);
    return packing_in(g, all_alive(g), spec, INT_MAX, budget);
}

int family_domination(const FamilySpec & spec)
{
    if (spec.is_scaled())
        throw UnsupportedError("family domination is defined for the base family, not " + spec.to_string());
    if (spec.is_all_cycles())
        throw UnsupportedError("the domination number is unbounded over all cycles");
    if (auto * gen = std::get_if<FamilySpec::Generator>(&spec.base())) {
        switch (gen->kind) {
        case GeneratorKind::Clique:
        case GeneratorKind::Star:
            return 1;
        case GeneratorKind::Path:
        case GeneratorKind::Cycle:
            return (gen->k + 2) / 3;
        }
    }
    return static_cast<int>(domination_number(*spec.pattern()).value);
}

} // namespace isolab
