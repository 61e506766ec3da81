#pragma once

#include "abp/conjecture.hpp"
#include "abp/search.hpp"

namespace abp {

// Brute-force reference implementations, used by the test suites to check the
// planner. Deliberately unoptimized: the enumeration walks the raw
// unify-or-skip tree with no best-first ordering and no subsumption
// filtering.

struct OracleBoundError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OracleResult {
    std::optional<int> min_weight;
    std::vector<Conjecture> witnesses;  // canonicalized minimal conjectures
    std::uint64_t explored = 0;
};

// Exhaustive enumeration of every decomposition / substitution / assumption
// choice sequence within the bounds; returns the exact minimum conjecture
// weight and all minimal witnesses up to variable renaming. Refuses bounds
// beyond depth 12 / weight 6.
OracleResult brute_force(const KnowledgeState& e, const Domain& d, const std::vector<Task>& goals,
                         int depth_bound, int weight_bound);

// Depth-first SHOP-style decomposition requiring full precondition
// satisfaction; first plan in deterministic order, or nothing.
std::optional<std::vector<Task>> plain_htn(const KnowledgeState& e, const Domain& d,
                                           const std::vector<Task>& goals, int depth_bound);

}  // namespace abp
