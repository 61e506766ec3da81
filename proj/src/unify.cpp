#include "abp/unify.hpp"

namespace abp {

namespace {

// theta is kept idempotent throughout: new bindings are fully resolved before
// insertion and back-substituted into existing range terms by extended().
std::optional<Substitution> unify_rec(const Term& a, const Term& b, Substitution theta) {
    Term x = theta.resolve(a);
    Term y = theta.resolve(b);

    if (x.is_variable()) {
        if (y.is_variable() && y.name() == x.name()) return theta;
        if (y.contains_variable(x.name())) return std::nullopt;  // occurs check
        return theta.extended(x.name(), y);
    }
    if (y.is_variable()) {
        if (x.contains_variable(y.name())) return std::nullopt;
        return theta.extended(y.name(), x);
    }
    switch (x.kind()) {
        case Term::Kind::Constant:
            if (y.is_constant() && x.name() == y.name()) return theta;
            return std::nullopt;
        case Term::Kind::Number:
            if (y.is_number() && x.value() == y.value()) return theta;
            return std::nullopt;
        case Term::Kind::Arith: {
            if (!y.is_arith() || x.op() != y.op()) return std::nullopt;
            auto t1 = unify_rec(x.lhs(), y.lhs(), std::move(theta));
            if (!t1) return std::nullopt;
            return unify_rec(x.rhs(), y.rhs(), std::move(*t1));
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

std::optional<Substitution> unify_terms(const Term& a, const Term& b, Substitution theta) {
    return unify_rec(a, b, std::move(theta));
}

std::optional<Substitution> unify(const Literal& p, const Literal& e, const Substitution& sigma) {
    if (p.positive != e.positive) return std::nullopt;
    if (p.predicate != e.predicate) return std::nullopt;
    if (p.args.size() != e.args.size()) return std::nullopt;
    Substitution theta = sigma.flattened();
    for (std::size_t i = 0; i < p.args.size(); ++i) {
        auto next = unify_rec(p.args[i], e.args[i], std::move(theta));
        if (!next) return std::nullopt;
        theta = std::move(*next);
    }
    return theta;
}

std::optional<Substitution> unify(const Precondition& p, const Literal& e,
                                  const Substitution& sigma) {
    if (std::holds_alternative<Constraint>(p)) return std::nullopt;
    return unify(std::get<Literal>(p), e, sigma);
}

}  // namespace abp
