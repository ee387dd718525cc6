#pragma once

#include <cstdint>

namespace isolab {

/// Default cap on search nodes for exact solvers and the subgraph matcher.
inline constexpr std::uint64_t default_node_budget_value = 100'000'000;

/// Default cap on the number of enumerated cycles.
inline constexpr std::uint64_t default_cycle_cap = 1'000'000;

/// The node budget, honoring the ISOLATION_LAB_NODE_BUDGET environment variable.
std::uint64_t default_node_budget();

/// Counts search nodes and throws ResourceError once the limit is passed.
/// Not thread safe; each solver invocation owns one.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit = default_node_budget()) : limit_(limit) {}

    void tick();

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace isolab
