#pragma once

#include "abp/domain.hpp"
#include "abp/unify.hpp"

namespace abp {

enum class AssumptionKind { Hypothesis, FactNegation, ConstraintViolation };

const char* to_string(AssumptionKind k);

// A precondition instance not entailed by the knowledge state, adopted
// provisionally so planning can proceed. Hypotheses are unknown facts (and
// may keep unbound variables), fact negations contradict a known fact, and
// constraint violations are comparisons that are false or undecidable.
struct Assumption {
    AssumptionKind kind = AssumptionKind::Hypothesis;
    Precondition content;

    Assumption() = default;
    Assumption(AssumptionKind k, Precondition c) : kind(k), content(std::move(c)) {}

    std::string to_string() const;

    bool operator==(const Assumption& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Assumption& o) const { return compare(*this, o) != 0; }
    bool operator<(const Assumption& o) const { return compare(*this, o) < 0; }

    friend int compare(const Assumption& a, const Assumption& b);
};

// Renames the variables of an expression to ?v0, ?v1, ... in order of first
// appearance. Two values are equal up to renaming iff their canonical forms
// are equal.
Literal canonicalize(const Literal& l);
Constraint canonicalize(const Constraint& c);
Precondition canonicalize(const Precondition& p);
Assumption canonicalize(const Assumption& a);

// A candidate way of executing an action: the substitution plus which
// precondition positions matched which facts. The matched sets drive the
// maximality filter.
struct SubstitutionCandidate {
    Substitution substitution;
    std::vector<std::size_t> matched_preconditions;  // sorted
    std::vector<std::size_t> matched_facts;          // sorted, indexes into the state
};

// Every substitution obtained by processing the preconditions in order,
// where each atom either unifies with a fact or is skipped to become an
// assumption later. Constraints never contribute bindings. The all-skip
// branch guarantees at least `sigma` itself is returned. Duplicate
// substitutions are collapsed to their first occurrence; the order is the
// one a depth-first enumeration would visit (matches in fact order before
// the skip).
std::vector<SubstitutionCandidate> enumerate_substitution_candidates(
    const std::vector<Precondition>& pre, const KnowledgeState& e, const Substitution& sigma);

// enumerate_substitution_candidates plus the maximality filter: candidates
// that are instance-restrictions of another candidate matching at least the
// same facts and positions are dropped as subsumed. Note the search expands
// the unfiltered enumeration: a dominated-looking skip branch can still be
// the cheapest legal one once assumptions are generated, so filtering is
// only safe where assumptions are not in play.
std::vector<SubstitutionCandidate> find_substitution_candidates(
    const std::vector<Precondition>& pre, const KnowledgeState& e, const Substitution& sigma);

std::vector<Substitution> find_substitutions(const std::vector<Precondition>& pre,
                                             const KnowledgeState& e, const Substitution& sigma);

// The assumptions required to execute an action with preconditions `pre`
// under `sigma` against `e`: every applied precondition not entailed by the
// state, classified, in precondition order, deduplicated up to variable
// renaming.
std::vector<Assumption> generate_assumptions(const std::vector<Precondition>& pre,
                                             const Substitution& sigma, const KnowledgeState& e);
std::vector<Assumption> generate_assumptions(const Operator& op, const Substitution& sigma,
                                             const KnowledgeState& e);
std::vector<Assumption> generate_assumptions(const Method& m, const Substitution& sigma,
                                             const KnowledgeState& e);

// Classification of one applied precondition known not to hold: constraints
// are violations, a literal whose negation is in the state is a fact
// negation, anything else is a hypothesis.
AssumptionKind classify(const Precondition& applied, const KnowledgeState& e);

// An assumption is legal iff its predicate (or comparison token) is declared
// hypothetical in the domain.
bool is_legal(const Assumption& a, const Domain& d);

// True iff every precondition applied under sigma still holds once the
// assumptions are folded into the state: present in `augmented`, declared in
// `h` (up to renaming), or a satisfied constraint. Contradictory
// precondition lists can assume a negation that withdraws a fact a sibling
// precondition matched; such branches are not executable and are dropped by
// the search and the oracle alike.
bool assumptions_support(const std::vector<Precondition>& pre, const Substitution& sigma,
                         const KnowledgeState& augmented, const std::vector<Assumption>& h);

// Expansion-time refinement: an undetermined constraint whose variables were
// introduced only by hypothesis assumptions of the same step can be
// discharged by binding one variable to a witness value that satisfies the
// comparison (the bound itself for <=, =, >=; one off for <, >, !=). The
// binding grounds the hypotheses, the constraint stops being an assumption,
// and the extended substitution flows into the action's effects. Without
// hypotheses in play nothing is solved, which keeps bound-0 search exactly
// classical.
std::pair<std::vector<Assumption>, Substitution> resolve_undetermined_constraints(
    std::vector<Assumption> assumptions, Substitution sigma);

}  // namespace abp
