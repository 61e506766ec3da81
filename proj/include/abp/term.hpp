#pragma once

#include <memory>
#include <string>
#include <vector>

#include "abp/rational.hpp"

namespace abp {

enum class ArithOp { Add, Sub, Mul, Div };

const char* to_token(ArithOp op);

// First-order term: a variable (?x), a constant (cab38), an exact rational
// number, or a binary arithmetic expression such as (- ?q 10). Terms are
// immutable; copies share structure.
class Term {
public:
    enum class Kind { Variable, Constant, Number, Arith };

    Term() : Term(constant("nil")) {}

    static Term variable(std::string name);
    static Term constant(std::string name);
    static Term number(Rational value);
    static Term arith(ArithOp op, Term lhs, Term rhs);

    Kind kind() const { return rep_->kind; }
    bool is_variable() const { return kind() == Kind::Variable; }
    bool is_constant() const { return kind() == Kind::Constant; }
    bool is_number() const { return kind() == Kind::Number; }
    bool is_arith() const { return kind() == Kind::Arith; }

    // Variable or Constant name.
    const std::string& name() const { return rep_->name; }
    const Rational& value() const { return rep_->value; }
    ArithOp op() const { return rep_->op; }
    Term lhs() const { return Term(rep_->lhs); }
    Term rhs() const { return Term(rep_->rhs); }

    bool is_ground() const;
    bool contains_variable(const std::string& var_name) const;
    void collect_variables(std::vector<std::string>& out) const;

    std::string to_string() const;

    bool operator==(const Term& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Term& o) const { return compare(*this, o) != 0; }
    bool operator<(const Term& o) const { return compare(*this, o) < 0; }

    friend int compare(const Term& a, const Term& b);

private:
    struct Rep {
        Kind kind;
        std::string name;   // Variable / Constant
        Rational value;     // Number
        ArithOp op = ArithOp::Add;
        std::shared_ptr<const Rep> lhs, rhs;
    };

    explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    std::shared_ptr<const Rep> rep_;
};

// Evaluates ground arithmetic subterms to Numbers. A division by zero leaves
// the offending subterm in place; constraint evaluation reports it as
// violated rather than aborting the search.
Term fold(const Term& t);

}  // namespace abp
