#include "abp/term.hpp"

#include <algorithm>

namespace abp {

const char* to_token(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "+";
        case ArithOp::Sub: return "-";
        case ArithOp::Mul: return "*";
        case ArithOp::Div: return "/";
    }
    return "?";
}

Term Term::variable(std::string name) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Variable;
    rep->name = std::move(name);
    return Term(std::move(rep));
}

Term Term::constant(std::string name) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Constant;
    rep->name = std::move(name);
    return Term(std::move(rep));
}

Term Term::number(Rational value) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Number;
    rep->value = value;
    return Term(std::move(rep));
}

Term Term::arith(ArithOp op, Term lhs, Term rhs) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Arith;
    rep->op = op;
    rep->lhs = lhs.rep_;
    rep->rhs = rhs.rep_;
    return Term(std::move(rep));
}

bool Term::is_ground() const {
    switch (kind()) {
        case Kind::Variable: return false;
        case Kind::Constant:
        case Kind::Number: return true;
        case Kind::Arith: return lhs().is_ground() && rhs().is_ground();
    }
    return true;
}

bool Term::contains_variable(const std::string& var_name) const {
    switch (kind()) {
        case Kind::Variable: return name() == var_name;
        case Kind::Constant:
        case Kind::Number: return false;
        case Kind::Arith:
            return lhs().contains_variable(var_name) || rhs().contains_variable(var_name);
    }
    return false;
}

void Term::collect_variables(std::vector<std::string>& out) const {
    switch (kind()) {
        case Kind::Variable:
            if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
            break;
        case Kind::Constant:
        case Kind::Number:
            break;
        case Kind::Arith:
            lhs().collect_variables(out);
            rhs().collect_variables(out);
            break;
    }
}

std::string Term::to_string() const {
    switch (kind()) {
        case Kind::Variable: return "?" + name();
        case Kind::Constant: return name();
        case Kind::Number: return value().to_string();
        case Kind::Arith:
            return std::string("(") + to_token(op()) + " " + lhs().to_string() + " " +
                   rhs().to_string() + ")";
    }
    return "";
}

int compare(const Term& a, const Term& b) {
    if (a.rep_ == b.rep_) return 0;
    auto rank = [](Term::Kind k) {
        switch (k) {
            case Term::Kind::Variable: return 0;
            case Term::Kind::Constant: return 1;
            case Term::Kind::Number: return 2;
            case Term::Kind::Arith: return 3;
        }
        return 4;
    };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case Term::Kind::Variable:
        case Term::Kind::Constant:
            return a.name().compare(b.name());
        case Term::Kind::Number:
            if (a.value() == b.value()) return 0;
            return a.value() < b.value() ? -1 : 1;
        case Term::Kind::Arith: {
            if (a.op() != b.op())
                return static_cast<int>(a.op()) < static_cast<int>(b.op()) ? -1 : 1;
            Term al = a.lhs(), bl = b.lhs();
            if (int c = compare(al, bl)) return c;
            Term ar = a.rhs(), br = b.rhs();
            return compare(ar, br);
        }
    }
    return 0;
}

Term fold(const Term& t) {
    if (!t.is_arith()) return t;
    Term l = fold(t.lhs());
    Term r = fold(t.rhs());
    if (l.is_number() && r.is_number()) {
        const Rational& a = l.value();
        const Rational& b = r.value();
        switch (t.op()) {
            case ArithOp::Add: return Term::number(a + b);
            case ArithOp::Sub: return Term::number(a - b);
            case ArithOp::Mul: return Term::number(a * b);
            case ArithOp::Div:
                if (auto q = a.divided_by(b)) return Term::number(*q);
                break;  // x/0 stays symbolic
        }
    }
    if (l == t.lhs() && r == t.rhs()) return t;
    return Term::arith(t.op(), l, r);
}

}  // namespace abp
