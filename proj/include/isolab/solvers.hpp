#pragma once

#include "isolab/budget.hpp"
#include "isolab/families.hpp"
#include "isolab/graph.hpp"

#include <cstdint>
#include <string>

namespace isolab {

/// Pruned: iterative deepening on the solution size, branching on the
/// neighborhood of one surviving family copy. Exhaustive: every subset in
/// lexicographic order, checked with the certificate checkers below.
enum class Engine { Pruned, Exhaustive };

std::string to_string(Engine engine);

struct SolverOptions {
    Engine engine = Engine::Pruned;
    std::uint64_t node_budget = default_node_budget();
};

/// An optimal value with the lexicographically smallest optimal witness.
struct SolverOutcome {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    Engine engine = Engine::Pruned;
};

/// gamma(G). Throws GraphError on the null graph.
SolverOutcome domination_number(const Graph & g, const SolverOptions & options = {});

/// iota(G, F): the smallest D with G - N[D] free of F-graphs. Throws
/// GraphError on the null graph and ResourceError when the budget runs out.
SolverOutcome isolation_number(const Graph & g, const FamilySpec & spec, const SolverOptions & options = {});

/// Certificate check: G - N[D] contains no member of spec.
bool is_isolating_set(const Graph & g, const FamilySpec & spec, const VertexSet & d);

/// Certificate check: G - S contains no member of spec.
bool is_hitting_set(const Graph & g, const FamilySpec & spec, const VertexSet & s);

/// Smallest S with G - S free of spec-graphs. Defined (as 0) on the null graph.
SolverOutcome hitting_number(const Graph & g, const FamilySpec & spec, const SolverOptions & options = {});

/// The decycling number: hitting number of the cycle family.
SolverOutcome decycling_number(const Graph & g, const SolverOptions & options = {});

} // namespace isolab
