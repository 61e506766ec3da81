#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abp/literal.hpp"

namespace abp {

// Finite map from variable names to terms. Construction enforces that no
// variable maps to itself and that the binding graph is acyclic, so repeated
// application always reaches a fixed point.
class Substitution {
public:
    Substitution() = default;

    // Validates the invariants; throws std::invalid_argument on a self-binding
    // or a cycle.
    static Substitution from_bindings(std::map<std::string, Term> bindings);

    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }
    const std::map<std::string, Term>& bindings() const { return bindings_; }

    const Term* lookup(const std::string& var_name) const;

    // Replaces bound variables until no binding applies. Terminates because
    // the binding graph is acyclic.
    Term resolve(const Term& t) const;

    // Rewrites every range term to its fixed point. The result denotes the
    // same mapping under repeated application but is idempotent, which is the
    // form unification extends.
    Substitution flattened() const;

    // Adds a binding, assuming the caller checked occurs/identity. Existing
    // range terms are rewritten so the substitution stays idempotent.
    Substitution extended(const std::string& var_name, const Term& t) const;

    // Composition: applies other to every range term, then adopts other's
    // bindings for variables outside this domain.
    Substitution composed(const Substitution& other) const;

    bool operator==(const Substitution& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Substitution& o) const { return compare(*this, o) != 0; }
    bool operator<(const Substitution& o) const { return compare(*this, o) < 0; }

    friend int compare(const Substitution& a, const Substitution& b);

    std::string to_string() const;

private:
    static Substitution unchecked(std::map<std::string, Term> bindings);

    std::map<std::string, Term> bindings_;
};

// Simultaneous replacement of every bound variable, then arithmetic folding.
// Bindings are not re-applied to substituted-in terms.
Term apply(const Term& t, const Substitution& s);
Literal apply(const Literal& l, const Substitution& s);
Constraint apply(const Constraint& c, const Substitution& s);
Precondition apply(const Precondition& p, const Substitution& s);

// Unqualified `apply` on std::variant or std::vector arguments would pull
// std::apply into overload resolution via ADL, which libstdc++ rejects with a
// hard error; call these with the abp:: qualifier.
template <typename T>
std::vector<T> apply(const std::vector<T>& xs, const Substitution& s) {
    std::vector<T> out;
    out.reserve(xs.size());
    for (const T& x : xs) out.push_back(abp::apply(x, s));
    return out;
}

}  // namespace abp
