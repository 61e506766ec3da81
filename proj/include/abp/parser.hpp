#pragma once

#include <iosfwd>

#include "abp/domain.hpp"
#include "abp/sexpr.hpp"

namespace abp {

// Domain description language, SHOP-family s-expressions:
//
//   (defdomain <name>
//     (:operator (!<name> ?v ...)
//       :pre  ( <atom-or-constraint> ... )
//       :del  ( <atom> ... )
//       :add  ( <atom> ... ))
//     (:method (<name> ?v ...)
//       :pre  ( <atom-or-constraint> ... )
//       :act  ( (<task> <term> ...) ... ))
//     (:hypothetical <pred> ... ))
//
//   (defproblem <name> <domain-name>
//     (:init (<atom> ...))
//     (:goal ((<task> <term> ...) ...)))
//
// Terms are ?variables, constants, exact rationals (10, 10.00, 7/2) or
// binary arithmetic (+ - * /); constraints use < <= = >= > !=.
Domain parse_domain(const std::string& text);
Problem parse_problem(const std::string& text, const Domain& d);

Domain parse_domain_file(const std::string& path);
Problem parse_problem_file(const std::string& path, const Domain& d);

// Individual grammar entry points, used by conjecture files and tests.
Term parse_term(const SExpr& node);
Literal parse_atom(const SExpr& node);
Precondition parse_precondition(const SExpr& node);
Task parse_task(const SExpr& node);

// Canonical text that re-parses to a structurally equal value.
std::string pretty_print(const Domain& d);
std::string pretty_print(const Problem& p);

}  // namespace abp
