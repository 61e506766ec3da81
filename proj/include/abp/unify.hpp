#pragma once

#include <optional>

#include "abp/substitution.hpp"

namespace abp {

// Most general unifier of two literals relative to a starting substitution.
// On success the result theta extends sigma (flattened to its fixed point)
// and apply(p, theta) == apply(e, theta) syntactically. Mismatched predicate,
// polarity or arity, and occurs-check failures all return nullopt: failure is
// a value, not an error. Negative literals unify only with negative literals.
std::optional<Substitution> unify(const Literal& p, const Literal& e, const Substitution& sigma);

// A constraint never unifies with a literal.
std::optional<Substitution> unify(const Precondition& p, const Literal& e,
                                  const Substitution& sigma);

// Term-level unification used by both overloads and by the validator.
std::optional<Substitution> unify_terms(const Term& a, const Term& b, Substitution theta);

}  // namespace abp
