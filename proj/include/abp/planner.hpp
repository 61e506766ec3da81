#pragma once

#include "abp/search.hpp"

namespace abp {

struct PlanReport {
    std::optional<Conjecture> conjecture;
    SearchStatus status = SearchStatus::NoSolutionWithinBounds;
    SearchStats stats;

    bool solved() const { return status == SearchStatus::Solved; }
};

// Runs the conjecture search on a validated problem. A solved report has
// passed replay validation before being returned.
PlanReport plan(const Domain& d, const Problem& p, const SearchConfig& cfg);

// Re-runs plan with max_assumptions 0, 1, 2, ... until a conjecture is found,
// the search proves that no assumption bound can help, or the configured
// ceiling (if any) is passed. The node budget is shared across iterations.
PlanReport plan_widening(const Domain& d, const Problem& p, SearchConfig cfg);

struct ValidationReport {
    bool valid = false;
    std::vector<KnowledgeState> trajectory;  // E_0 .. E_n when valid
    // 1-based step index and the precondition that could not be satisfied.
    std::optional<std::pair<int, Precondition>> first_failure;
};

// Independent replay of a conjecture: each step's assumptions are joined into
// the current state, the step's operator preconditions must then be
// satisfiable (residual constraint violations must be declared by the step),
// and the operator effects produce the next state. Kept deliberately separate
// from the search code paths so the two can check each other.
ValidationReport validate(const Conjecture& chi, const KnowledgeState& e, const Domain& d);

}  // namespace abp
