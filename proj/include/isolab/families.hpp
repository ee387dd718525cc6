#pragma once

#include "isolab/budget.hpp"
#include "isolab/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace isolab {

enum class GeneratorKind { Clique, Path, Cycle, Star };

/// The standard graph: K_k, P_k on k vertices, C_k, or the star K_{1,k} on
/// k+1 vertices with the center at vertex 0. Throws ParameterError for k < 1,
/// or k < 3 for cycles.
Graph generator_graph(GeneratorKind kind, int k);

/// A family of graphs: one pattern, a named generator, all cycles, or t
/// pairwise vertex-disjoint copies of members of one of those.
///
/// Scaled specs are normalized on construction: scaled(1, F) is F and
/// scaled(s, scaled(t, F)) is scaled(s * t, F).
class FamilySpec {
public:
    struct SinglePattern {
        Graph pattern;
    };
    struct Generator {
        GeneratorKind kind;
        int k;
    };
    struct AllCycles {
    };
    using Base = std::variant<SinglePattern, Generator, AllCycles>;

    /// Throws ParameterError on a null pattern.
    static FamilySpec single(Graph pattern);
    static FamilySpec generator(GeneratorKind kind, int k);
    static FamilySpec all_cycles();
    /// Throws ParameterError for t < 1.
    static FamilySpec scaled(int t, const FamilySpec & inner);

    const Base & base() const noexcept { return base_; }
    /// t in tF; 1 for an unscaled family.
    int multiplicity() const noexcept { return t_; }
    bool is_scaled() const noexcept { return t_ > 1; }
    bool is_all_cycles() const noexcept { return std::holds_alternative<AllCycles>(base_); }

    /// The family with multiplicity 1.
    FamilySpec unscaled() const;

    /// The single graph every member is isomorphic to, for pattern and
    /// generator bases; empty for all cycles.
    const std::optional<Graph> & pattern() const noexcept { return pattern_; }

    /// Smallest order of a base member.
    int min_member_order() const;

    /// CLI syntax, e.g. "K3", "2*C5", "cycles", "pattern(n=3:0-1,1-2)".
    std::string to_string() const;

private:
    FamilySpec(Base base, int t);

    Base base_;
    int t_ = 1;
    std::optional<Graph> pattern_;
};

/// Parses "[t*]base" with base one of Kk, Pk, Ck, Sk, "cycles" or
/// "file:<edge-list path>". Throws ParseError naming the offending token.
FamilySpec parse_family(const std::string & text);

/// Alive flags over the vertices of a host graph; searches only see vertices
/// whose flag is non-zero.
using VertexMask = std::vector<char>;

/// One embedding (pattern vertex i maps to result[i]) of `pattern` into the
/// alive part of `host` as a not necessarily induced subgraph.
std::optional<std::vector<Vertex>> find_embedding(const Graph & pattern, const Graph & host, const VertexMask & alive,
    SearchBudget & budget);

/// Calls `visit` for every embedding of `pattern` into the alive part of
/// `host`, optionally only those mapping pattern vertex `anchor_pattern` to
/// `anchor_host`. Stops early when `visit` returns false.
void for_each_embedding(const Graph & pattern, const Graph & host, const VertexMask & alive, SearchBudget & budget,
    const std::function<bool(const std::vector<Vertex> &)> & visit, int anchor_pattern = -1, Vertex anchor_host = -1);

/// Vertex set of some member of `spec` contained in the alive part of `g`,
/// or nothing. For cycles a shortest cycle is returned; for scaled families
/// the union of t disjoint copies.
std::optional<std::vector<Vertex>> find_family_copy(const Graph & g, const VertexMask & alive, const FamilySpec & spec,
    SearchBudget & budget);

/// Maximum number of pairwise vertex-disjoint members of the (unscaled)
/// family in the alive part of `g`, stopping as soon as `stop_at` is reached.
/// The chosen copies' vertex sets are written to `copies` when given.
int packing_in(const Graph & g, const VertexMask & alive, const FamilySpec & base, int stop_at, SearchBudget & budget,
    std::vector<std::vector<Vertex>> * copies = nullptr);

/// Whether g contains a subgraph isomorphic to a member of spec.
bool contains_family(const Graph & g, const FamilySpec & spec, std::uint64_t node_budget = default_node_budget());

/// Maximum number of pairwise vertex-disjoint members of spec contained in g.
/// Throws ParameterError for a scaled spec.
int packing_number(const Graph & g, const FamilySpec & spec, std::uint64_t node_budget = default_node_budget());

/// gamma(F) maximized over the family. Throws UnsupportedError for all cycles
/// (unbounded) and for scaled families.
int family_domination(const FamilySpec & spec);

} // namespace isolab
