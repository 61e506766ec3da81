#include "abp/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace abp {

namespace {

Term substitute(const Term& t, const std::map<std::string, Term>& bindings) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto it = bindings.find(t.name());
            return it == bindings.end() ? t : it->second;
        }
        case Term::Kind::Constant:
        case Term::Kind::Number:
            return t;
        case Term::Kind::Arith:
            return Term::arith(t.op(), substitute(t.lhs(), bindings),
                               substitute(t.rhs(), bindings));
    }
    return t;
}

}  // namespace

Substitution Substitution::from_bindings(std::map<std::string, Term> bindings) {
    for (const auto& [var, term] : bindings) {
        if (term.is_variable() && term.name() == var)
            throw std::invalid_argument("substitution binds ?" + var + " to itself");
    }
    // Cycle check: follow variable occurrences through the binding graph.
    for (const auto& [var, term] : bindings) {
        std::vector<std::string> stack{var};
        std::vector<std::string> seen;
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            auto it = bindings.find(v);
            if (it == bindings.end()) continue;
            std::vector<std::string> range_vars;
            it->second.collect_variables(range_vars);
            for (const std::string& rv : range_vars) {
                if (rv == var) throw std::invalid_argument("cyclic substitution through ?" + var);
                if (std::find(seen.begin(), seen.end(), rv) == seen.end()) {
                    seen.push_back(rv);
                    stack.push_back(rv);
                }
            }
        }
    }
    return unchecked(std::move(bindings));
}

Substitution Substitution::unchecked(std::map<std::string, Term> bindings) {
    Substitution s;
    s.bindings_ = std::move(bindings);
    return s;
}

const Term* Substitution::lookup(const std::string& var_name) const {
    auto it = bindings_.find(var_name);
    return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::resolve(const Term& t) const {
    Term cur = t;
    for (;;) {
        Term next = fold(substitute(cur, bindings_));
        if (next == cur) return cur;
        cur = next;
    }
}

Substitution Substitution::flattened() const {
    std::map<std::string, Term> out;
    for (const auto& [var, term] : bindings_) {
        Term r = resolve(term);
        if (r.is_variable() && r.name() == var) continue;  // collapsed to identity
        out.emplace(var, r);
    }
    return unchecked(std::move(out));
}

Substitution Substitution::extended(const std::string& var_name, const Term& t) const {
    std::map<std::string, Term> out;
    std::map<std::string, Term> unit{{var_name, t}};
    for (const auto& [var, term] : bindings_) {
        Term r = fold(substitute(term, unit));
        if (r.is_variable() && r.name() == var) continue;
        out.emplace(var, r);
    }
    out.emplace(var_name, t);
    return unchecked(std::move(out));
}

Substitution Substitution::composed(const Substitution& other) const {
    std::map<std::string, Term> out;
    for (const auto& [var, term] : bindings_) {
        Term r = fold(substitute(term, other.bindings_));
        if (r.is_variable() && r.name() == var) continue;
        out.emplace(var, r);
    }
    for (const auto& [var, term] : other.bindings_) {
        if (!out.count(var) && !bindings_.count(var)) out.emplace(var, term);
    }
    return unchecked(std::move(out));
}

int compare(const Substitution& a, const Substitution& b) {
    auto ia = a.bindings_.begin(), ib = b.bindings_.begin();
    for (; ia != a.bindings_.end() && ib != b.bindings_.end(); ++ia, ++ib) {
        if (int c = ia->first.compare(ib->first)) return c < 0 ? -1 : 1;
        if (int c = compare(ia->second, ib->second)) return c;
    }
    if (ia != a.bindings_.end()) return 1;
    if (ib != b.bindings_.end()) return -1;
    return 0;
}

std::string Substitution::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [var, term] : bindings_) {
        if (!first) s += ", ";
        first = false;
        s += "?" + var + " -> " + term.to_string();
    }
    return s + "}";
}

Term apply(const Term& t, const Substitution& s) {
    return fold(substitute(t, s.bindings()));
}

Literal apply(const Literal& l, const Substitution& s) {
    Literal out = l;
    for (Term& t : out.args) t = apply(t, s);
    return out;
}

Constraint apply(const Constraint& c, const Substitution& s) {
    return Constraint(c.op, apply(c.lhs, s), apply(c.rhs, s));
}

Precondition apply(const Precondition& p, const Substitution& s) {
    if (std::holds_alternative<Literal>(p)) return apply(std::get<Literal>(p), s);
    return apply(std::get<Constraint>(p), s);
}

}  // namespace abp
