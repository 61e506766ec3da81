#pragma once

#include "abp/assumptions.hpp"

namespace abp {

// One plan step: the assumptions that must hold before the action executes.
struct ConjectureStep {
    std::vector<Assumption> assumptions;
    Task action;  // primitive

    bool operator==(const ConjectureStep& o) const {
        return assumptions == o.assumptions && action == o.action;
    }
    bool operator!=(const ConjectureStep& o) const { return !(*this == o); }
};

// A plan annotated per step with the assumptions required for that step to be
// applicable; weight is the total assumption count. Assumptions made by a
// decomposition that is never followed by a primitive step are kept in
// final_assumptions so no assumption is silently lost.
struct Conjecture {
    std::vector<ConjectureStep> steps;
    std::vector<Assumption> final_assumptions;
    int total_weight = 0;

    bool empty() const { return steps.empty() && final_assumptions.empty(); }

    std::vector<Task> actions() const;

    bool operator==(const Conjecture& o) const {
        return total_weight == o.total_weight && steps == o.steps &&
               final_assumptions == o.final_assumptions;
    }
    bool operator!=(const Conjecture& o) const { return !(*this == o); }
};

// Renames all variables across the conjecture in order of first appearance;
// two conjectures are equal up to renaming iff their canonical forms match.
Conjecture canonicalize(const Conjecture& c);

// Serialized form:
//   (:conjecture :weight W
//     (:step (:assume (<atom-or-constraint> ...)) (:action (!name arg ...)))
//     ...)
// with an optional trailing (:assume-final (...)) clause.
std::string to_sexpr(const Conjecture& c);
Conjecture parse_conjecture(const std::string& text);

struct SExpr;  // fwd
Conjecture parse_conjecture_node(const SExpr& root);

// JSON mirror of the sexp form; terms stay in their sexp spelling so the two
// encodings decode to identical values.
std::string to_json(const Conjecture& c);
Conjecture conjecture_from_json(const std::string& text);

}  // namespace abp
