#include "isolab/solvers.hpp"
#include "isolab/errors.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace isolab {

std::string to_string(Engine engine)
{
    return engine == Engine::Pruned ? "pruned" : "exhaustive";
}

bool is_isolating_set(const Graph & g, const FamilySpec & spec, const VertexSet & d)
{
    return ! contains_family(remove_closed_neighborhood(g, d).graph, spec);
}

bool is_hitting_set(const Graph & g, const FamilySpec & spec, const VertexSet & s)
{
    return ! contains_family(remove_vertices(g, s).graph, spec);
}

namespace {

enum class Mode { Isolate, Hit };

// Depth-bounded search for a solution extending the current set. Every
// surviving family copy must be touched by a new member: for isolation the
// member lies in N[copy], for hitting it lies in the copy itself. Candidates
// already refuted in an earlier sibling branch are skipped.
class PrunedSearch {
public:
    PrunedSearch(const Graph & g, const FamilySpec & spec, Mode mode, SearchBudget & budget)
        : g_(g), spec_(spec), mode_(mode), budget_(budget), dominating_(mode == Mode::Isolate && ! spec.is_scaled() && spec.pattern()
              && spec.pattern()->order() == 1)
    {
        auto n = static_cast<std::size_t>(g.order());
        cover_.assign(n, 0);
        alive_.assign(n, 1);
        chosen_.assign(n, 0);
        refuted_.assign(n, 0);
    }

    void add(Vertex v)
    {
        chosen_[static_cast<std::size_t>(v)] = 1;
        members_.push_back(v);
        if (mode_ == Mode::Hit) {
            alive_[static_cast<std::size_t>(v)] = 0;
            return;
        }
        touch(v, +1);
        for (auto w : g_.neighbors(v))
            touch(w, +1);
    }

    void remove(Vertex v)
    {
        chosen_[static_cast<std::size_t>(v)] = 0;
        members_.pop_back();
        if (mode_ == Mode::Hit) {
            alive_[static_cast<std::size_t>(v)] = 1;
            return;
        }
        touch(v, -1);
        for (auto w : g_.neighbors(v))
            touch(w, -1);
    }

    /// Whether at most `remaining` further vertices, all greater than
    /// `min_next`, complete the current set.
    bool feasible(Vertex min_next, int remaining)
    {
        budget_.tick();
        auto candidates = next_candidates(min_next);
        if (! candidates)
            return true;
        if (remaining == 0 || candidates->empty())
            return false;

        std::vector<Vertex> refuted_here;
        bool found = false;
        for (auto c : *candidates) {
            if (refuted_[static_cast<std::size_t>(c)])
                continue;
            add(c);
            found = feasible(min_next, remaining - 1);
            remove(c);
            if (found)
                break;
            refuted_[static_cast<std::size_t>(c)] = 1;
            refuted_here.push_back(c);
        }
        for (auto c : refuted_here)
            refuted_[static_cast<std::size_t>(c)] = 0;
        return found;
    }

    const std::vector<Vertex> & members() const { return members_; }

private:
    void touch(Vertex v, int delta)
    {
        auto & c = cover_[static_cast<std::size_t>(v)];
        c += delta;
        alive_[static_cast<std::size_t>(v)] = c == 0 ? 1 : 0;
    }

    bool eligible(Vertex v, Vertex min_next) const
    {
        return v > min_next && ! chosen_[static_cast<std::size_t>(v)] && ! refuted_[static_cast<std::size_t>(v)];
    }

    // Nothing when the current set is already a solution; otherwise the
    // vertices that can still touch one surviving copy.
    std::optional<std::vector<Vertex>> next_candidates(Vertex min_next)
    {
        if (dominating_)
            return undominated_branch(min_next);

        auto copy = find_family_copy(g_, alive_, spec_, budget_);
        if (! copy)
            return std::nullopt;
        std::vector<Vertex> result;
        for (auto x : *copy) {
            if (eligible(x, min_next))
                result.push_back(x);
            if (mode_ == Mode::Isolate)
                for (auto w : g_.neighbors(x))
                    if (eligible(w, min_next))
                        result.push_back(w);
        }
        std::ranges::sort(result);
        auto dup = std::ranges::unique(result);
        result.erase(dup.begin(), dup.end());
        return result;
    }

    // For plain domination, branch on the undominated vertex with the fewest
    // eligible dominators.
    std::optional<std::vector<Vertex>> undominated_branch(Vertex min_next)
    {
        std::optional<std::vector<Vertex>> best;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (! alive_[static_cast<std::size_t>(v)])
                continue;
            std::vector<Vertex> options;
            if (eligible(v, min_next))
                options.push_back(v);
            for (auto w : g_.neighbors(v))
                if (eligible(w, min_next))
                    options.push_back(w);
            if (! best || options.size() < best->size()) {
                std::ranges::sort(options);
                best = std::move(options);
                if (best->empty())
                    break;
            }
        }
        return best;
    }

    const Graph & g_;
    const FamilySpec & spec_;
    Mode mode_;
    SearchBudget & budget_;
    bool dominating_;
    std::vector<int> cover_;
    VertexMask alive_;
    std::vector<char> chosen_, refuted_;
    std::vector<Vertex> members_;
};

SolverOutcome pruned_minimum(const Graph & g, const FamilySpec & spec, Mode mode, std::uint64_t node_budget)
{
    SearchBudget budget(node_budget);
    PrunedSearch search(g, spec, mode, budget);

    int value = 0;
    while (! search.feasible(-1, value))
        ++value;

    // Greedy lexicographic reconstruction: fix the smallest first member that
    // still admits a completion, then the next.
    Vertex last = -1;
    for (int slot = 0; slot < value; ++slot) {
        int remaining = value - slot - 1;
        bool placed = false;
        for (Vertex v = last + 1; v < g.order() && ! placed; ++v) {
            search.add(v);
            if (search.feasible(v, remaining)) {
                last = v;
                placed = true;
            }
            else
                search.remove(v);
        }
        if (! placed)
            throw std::logic_error("witness reconstruction failed");
    }

    return {value, VertexSet(g.order(), search.members()), budget.used(), Engine::Pruned};
}

// Calls `test` on every subset of size s of 0..n-1 in lexicographic order
// until it returns true.
std::optional<std::vector<Vertex>> first_subset(int n, int s, const std::function<bool(const std::vector<Vertex> &)> & test)
{
    std::vector<Vertex> subset(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        subset[static_cast<std::size_t>(i)] = i;
    if (s > n)
        return std::nullopt;
    while (true) {
        if (test(subset))
            return subset;
        int i = s - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - s + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

SolverOutcome exhaustive_minimum(const Graph & g, const std::function<bool(const VertexSet &)> & certifies,
    std::uint64_t node_budget)
{
    SearchBudget budget(node_budget);
    for (int s = 0; s <= g.order(); ++s) {
        auto found = first_subset(g.order(), s, [&](const std::vector<Vertex> & subset) {
            budget.tick();
            return certifies(VertexSet(g.order(), subset));
        });
        if (found)
            return {s, VertexSet(g.order(), *found), budget.used(), Engine::Exhaustive};
    }
    throw std::logic_error("the full vertex set always certifies");
}

void require_non_null(const Graph & g, const char * what)
{
    if (g.is_null())
        throw GraphError(std::string(what) + " is undefined for the null graph");
}

} // namespace

SolverOutcome domination_number(const Graph & g, const SolverOptions & options)
{
    require_non_null(g, "the domination number");
    auto k1 = FamilySpec::generator(GeneratorKind::Clique, 1);
    if (options.engine == Engine::Exhaustive)
        return exhaustive_minimum(g, [&](const VertexSet & d) {
            return closed_neighborhood(g, d).size() == static_cast<std::size_t>(g.order());
        }, options.node_budget);
    return pruned_minimum(g, k1, Mode::Isolate, options.node_budget);
}

SolverOutcome isolation_number(const Graph & g, const FamilySpec & spec, const SolverOptions & options)
{
    require_non_null(g, "the isolation number");
    if (options.engine == Engine::Exhaustive)
        return exhaustive_minimum(g, [&](const VertexSet & d) { return is_isolating_set(g, spec, d); }, options.node_budget);
    return pruned_minimum(g, spec, Mode::Isolate, options.node_budget);
}

SolverOutcome hitting_number(const Graph & g, const FamilySpec & spec, const SolverOptions & options)
{
    if (options.engine == Engine::Exhaustive)
        return exhaustive_minimum(g, [&](const VertexSet & s) { return is_hitting_set(g, spec, s); }, options.node_budget);
    return pruned_minimum(g, spec, Mode::Hit, options.node_budget);
}

SolverOutcome decycling_number(const Graph & g, const SolverOptions & options)
{
    return hitting_number(g, FamilySpec::all_cycles(), options);
}

} // namespace isolab
