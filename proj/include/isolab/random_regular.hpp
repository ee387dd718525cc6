#pragma once

#include "isolab/graph.hpp"

#include <cstdint>

namespace isolab {

inline constexpr std::uint64_t default_rejection_budget = 100'000;

/// A pair (n, d) admitting a d-regular graph on n vertices.
struct GoodPair {
    int n;
    int d;
};

/// n > d and nd even. Pairs with n or d below 1 are reported as not good.
bool is_good(int n, int d);

/// A simple d-regular graph on n vertices from the pairing model, rejecting
/// whole pairings that produce a loop or a repeated edge. The same (n, d,
/// seed) always yields the same graph in a given build; the generator is
/// std::mt19937_64. When 2d > n-1 the complement of an (n-1-d)-regular
/// sample is returned. Throws ParameterError when (n, d) is not good and
/// ResourceError after `max_attempts` rejected pairings.
Graph sample_regular(int n, int d, std::uint64_t seed, std::uint64_t max_attempts = default_rejection_budget);

} // namespace isolab
