#pragma once

#include <string>
#include <variant>
#include <vector>

#include "abp/term.hpp"

namespace abp {

// Signed atom: (at cab38 downtown) or (not (isloaded cab74)).
struct Literal {
    bool positive = true;
    std::string predicate;
    std::vector<Term> args;

    Literal() = default;
    Literal(std::string pred, std::vector<Term> a, bool pos = true)
        : positive(pos), predicate(std::move(pred)), args(std::move(a)) {}

    Literal negated() const {
        Literal l = *this;
        l.positive = !l.positive;
        return l;
    }

    bool is_ground() const;
    void collect_variables(std::vector<std::string>& out) const;
    std::string to_string() const;

    bool operator==(const Literal& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Literal& o) const { return compare(*this, o) != 0; }
    bool operator<(const Literal& o) const { return compare(*this, o) < 0; }

    friend int compare(const Literal& a, const Literal& b);
};

enum class CmpOp { Lt, Le, Eq, Ge, Gt, Ne };

const char* to_token(CmpOp op);

// Numeric comparison between two terms, e.g. (>= ?q 10).
struct Constraint {
    CmpOp op = CmpOp::Eq;
    Term lhs, rhs;

    Constraint() = default;
    Constraint(CmpOp o, Term l, Term r) : op(o), lhs(std::move(l)), rhs(std::move(r)) {}

    bool is_ground() const { return lhs.is_ground() && rhs.is_ground(); }
    void collect_variables(std::vector<std::string>& out) const;
    std::string to_string() const;

    bool operator==(const Constraint& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Constraint& o) const { return compare(*this, o) != 0; }
    bool operator<(const Constraint& o) const { return compare(*this, o) < 0; }

    friend int compare(const Constraint& a, const Constraint& b);
};

// Operator and method preconditions mix atoms and comparisons.
using Precondition = std::variant<Literal, Constraint>;

int compare(const Precondition& a, const Precondition& b);
std::string to_string(const Precondition& p);
void collect_variables(const Precondition& p, std::vector<std::string>& out);

enum class ConstraintEval { Satisfied, Violated, Undetermined };

// Satisfied/Violated when both sides fold to numbers; Undetermined while any
// variable remains. A ground side that cannot fold (division by zero) counts
// as Violated.
ConstraintEval eval_constraint(const Constraint& c);

}  // namespace abp
