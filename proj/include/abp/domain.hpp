#pragma once

#include <set>
#include <string>
#include <vector>

#include "abp/state.hpp"

namespace abp {

// Task invocation: primitive tasks carry the `!` prefix in their surface name
// and resolve to operators, compound tasks resolve to methods.
struct Task {
    bool primitive = false;
    std::string name;  // without the `!` prefix
    std::vector<Term> args;

    Task() = default;
    Task(bool prim, std::string n, std::vector<Term> a)
        : primitive(prim), name(std::move(n)), args(std::move(a)) {}

    std::string surface_name() const { return primitive ? "!" + name : name; }
    std::string to_string() const;

    bool operator==(const Task& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Task& o) const { return compare(*this, o) != 0; }
    bool operator<(const Task& o) const { return compare(*this, o) < 0; }

    friend int compare(const Task& a, const Task& b);
};

Task apply(const Task& t, const Substitution& s);
std::vector<Task> apply(const std::vector<Task>& ts, const Substitution& s);

// Primitive action schema <Pre, Del, Add>.
struct Operator {
    std::string name;  // without the `!` prefix
    std::vector<std::string> params;
    std::vector<Precondition> pre;
    std::vector<Literal> del;
    std::vector<Literal> add;
};

// Decomposition rule <Pre, Act>. Preconditions may introduce variables beyond
// the parameters; those are bound existentially by the substitution search.
struct Method {
    std::string name;
    std::vector<std::string> params;
    std::vector<Precondition> pre;
    std::vector<Task> act;
};

struct Domain {
    std::string name;
    std::vector<Operator> operators;
    std::vector<Method> methods;
    // Predicate names and comparison-operator tokens whose assumptions are
    // legal in a conjecture.
    std::set<std::string> hypothetical;
    std::vector<std::string> warnings;

    const Operator* find_operator(const std::string& op_name) const;
    std::vector<const Method*> find_methods(const std::string& method_name) const;
    bool has_task_name(const Task& t) const;
};

struct Problem {
    std::string name;
    std::string domain_name;
    KnowledgeState init;
    std::vector<Task> goals;
};

// Structural checks shared by the parser and programmatic construction:
// predicate arity consistency, effect-variable closure, name uniqueness
// (operators; method names may repeat as alternatives but must not collide
// with operator names), body-task resolution. Throws std::invalid_argument
// with a diagnostic; fills d.warnings for non-fatal findings.
void validate_domain(Domain& d);
void validate_problem(const Problem& p, const Domain& d);

}  // namespace abp
