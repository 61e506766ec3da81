#include "abp/literal.hpp"

namespace abp {

bool Literal::is_ground() const {
    for (const Term& t : args)
        if (!t.is_ground()) return false;
    return true;
}

void Literal::collect_variables(std::vector<std::string>& out) const {
    for (const Term& t : args) t.collect_variables(out);
}

std::string Literal::to_string() const {
    std::string s = "(" + predicate;
    for (const Term& t : args) s += " " + t.to_string();
    s += ")";
    if (!positive) s = "(not " + s + ")";
    return s;
}

int compare(const Literal& a, const Literal& b) {
    if (int c = a.predicate.compare(b.predicate)) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
    if (a.positive != b.positive) return a.positive ? -1 : 1;
    return 0;
}

const char* to_token(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ge: return ">=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ne: return "!=";
    }
    return "?";
}

void Constraint::collect_variables(std::vector<std::string>& out) const {
    lhs.collect_variables(out);
    rhs.collect_variables(out);
}

std::string Constraint::to_string() const {
    return std::string("(") + to_token(op) + " " + lhs.to_string() + " " + rhs.to_string() + ")";
}

int compare(const Constraint& a, const Constraint& b) {
    if (a.op != b.op) return static_cast<int>(a.op) < static_cast<int>(b.op) ? -1 : 1;
    if (int c = compare(a.lhs, b.lhs)) return c;
    return compare(a.rhs, b.rhs);
}

int compare(const Precondition& a, const Precondition& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (std::holds_alternative<Literal>(a))
        return compare(std::get<Literal>(a), std::get<Literal>(b));
    return compare(std::get<Constraint>(a), std::get<Constraint>(b));
}

std::string to_string(const Precondition& p) {
    if (std::holds_alternative<Literal>(p)) return std::get<Literal>(p).to_string();
    return std::get<Constraint>(p).to_string();
}

void collect_variables(const Precondition& p, std::vector<std::string>& out) {
    if (std::holds_alternative<Literal>(p))
        std::get<Literal>(p).collect_variables(out);
    else
        std::get<Constraint>(p).collect_variables(out);
}

ConstraintEval eval_constraint(const Constraint& c) {
    Term l = fold(c.lhs);
    Term r = fold(c.rhs);
    if (l.is_number() && r.is_number()) {
        const Rational& a = l.value();
        const Rational& b = r.value();
        bool ok = false;
        switch (c.op) {
            case CmpOp::Lt: ok = a < b; break;
            case CmpOp::Le: ok = a <= b; break;
            case CmpOp::Eq: ok = a == b; break;
            case CmpOp::Ge: ok = a >= b; break;
            case CmpOp::Gt: ok = a > b; break;
            case CmpOp::Ne: ok = a != b; break;
        }
        return ok ? ConstraintEval::Satisfied : ConstraintEval::Violated;
    }
    if (!l.is_ground() || !r.is_ground()) return ConstraintEval::Undetermined;
    // Ground but not a pair of numbers: constants under a numeric comparison
    // or a division by zero that refused to fold. Nothing can still make such
    // a comparison true, so it counts as violated rather than aborting.
    return ConstraintEval::Violated;
}

}  // namespace abp
