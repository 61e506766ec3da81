#include "abp/assumptions.hpp"

#include <algorithm>
#include <map>

namespace abp {

const char* to_string(AssumptionKind k) {
    switch (k) {
        case AssumptionKind::Hypothesis: return "hypothesis";
        case AssumptionKind::FactNegation: return "fact-negation";
        case AssumptionKind::ConstraintViolation: return "constraint-violation";
    }
    return "?";
}

std::string Assumption::to_string() const {
    return abp::to_string(content);
}

// The kind is derivable from the content and the state it was generated
// against, so assumption identity is structural on the content alone. This
// keeps serialization (which stores bare atoms and constraints) lossless.
int compare(const Assumption& a, const Assumption& b) {
    return compare(a.content, b.content);
}

namespace {

class Renamer {
public:
    Term rename(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Variable: {
                auto [it, inserted] = names_.emplace(t.name(), "v" + std::to_string(next_));
                if (inserted) ++next_;
                return Term::variable(it->second);
            }
            case Term::Kind::Constant:
            case Term::Kind::Number:
                return t;
            case Term::Kind::Arith:
                return Term::arith(t.op(), rename(t.lhs()), rename(t.rhs()));
        }
        return t;
    }

    Literal rename(const Literal& l) {
        Literal out = l;
        for (Term& t : out.args) t = rename(t);
        return out;
    }

    Constraint rename(const Constraint& c) {
        return Constraint(c.op, rename(c.lhs), rename(c.rhs));
    }

private:
    std::map<std::string, std::string> names_;
    std::size_t next_ = 0;
};

}  // namespace

Literal canonicalize(const Literal& l) { return Renamer().rename(l); }
Constraint canonicalize(const Constraint& c) { return Renamer().rename(c); }

Precondition canonicalize(const Precondition& p) {
    if (std::holds_alternative<Literal>(p)) return canonicalize(std::get<Literal>(p));
    return canonicalize(std::get<Constraint>(p));
}

Assumption canonicalize(const Assumption& a) {
    return Assumption(a.kind, canonicalize(a.content));
}

namespace {

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// One-way matching: can `pattern` be instantiated to `value` by binding only
// pattern variables? Bindings accumulate in rho across calls.
bool match_instance(const Term& pattern, const Term& value, std::map<std::string, Term>& rho) {
    switch (pattern.kind()) {
        case Term::Kind::Variable: {
            auto it = rho.find(pattern.name());
            if (it != rho.end()) return it->second == value;
            rho.emplace(pattern.name(), value);
            return true;
        }
        case Term::Kind::Constant:
            return value.is_constant() && pattern.name() == value.name();
        case Term::Kind::Number:
            return value.is_number() && pattern.value() == value.value();
        case Term::Kind::Arith:
            return value.is_arith() && pattern.op() == value.op() &&
                   match_instance(pattern.lhs(), value.lhs(), rho) &&
                   match_instance(pattern.rhs(), value.rhs(), rho);
    }
    return false;
}

// True if `weaker` is an instance-restriction of `stronger`: some rho turns
// stronger's bindings (extended by rho itself for fresh variables) into
// exactly weaker's bindings on weaker's domain.
bool instance_restriction(const SubstitutionCandidate& stronger,
                          const SubstitutionCandidate& weaker) {
    std::map<std::string, Term> rho;
    for (const auto& [var, term] : weaker.substitution.bindings()) {
        const Term* range = stronger.substitution.lookup(var);
        Term pattern = range ? *range : Term::variable(var);
        if (!match_instance(pattern, term, rho)) return false;
    }
    return true;
}

bool subsumes(const SubstitutionCandidate& a, const SubstitutionCandidate& b) {
    return is_subset(b.matched_facts, a.matched_facts) &&
           is_subset(b.matched_preconditions, a.matched_preconditions) &&
           instance_restriction(a, b);
}

}  // namespace

std::vector<SubstitutionCandidate> enumerate_substitution_candidates(
    const std::vector<Precondition>& pre, const KnowledgeState& e, const Substitution& sigma) {
    std::vector<SubstitutionCandidate> candidates;
    candidates.push_back({sigma.flattened(), {}, {}});

    // Process preconditions in order. Match branches come before the skip
    // branch so the candidate list stays in the lexicographic order a
    // depth-first decomposition would visit.
    for (std::size_t i = 0; i < pre.size(); ++i) {
        std::vector<SubstitutionCandidate> next;
        for (const SubstitutionCandidate& cand : candidates) {
            if (const auto* lit = std::get_if<Literal>(&pre[i])) {
                const auto& facts = e.facts();
                for (std::size_t j = 0; j < facts.size(); ++j) {
                    auto theta = unify(*lit, facts[j], cand.substitution);
                    if (!theta) continue;
                    SubstitutionCandidate ext;
                    ext.substitution = std::move(*theta);
                    ext.matched_preconditions = cand.matched_preconditions;
                    ext.matched_preconditions.push_back(i);
                    ext.matched_facts = cand.matched_facts;
                    ext.matched_facts.insert(
                        std::upper_bound(ext.matched_facts.begin(), ext.matched_facts.end(), j),
                        j);
                    next.push_back(std::move(ext));
                }
            }
            next.push_back(cand);  // skipped: becomes an assumption downstream
        }
        candidates = std::move(next);
    }

    // A duplicated substitution generates the same assumptions and the same
    // successor, so only the first occurrence is kept.
    std::vector<SubstitutionCandidate> out;
    for (SubstitutionCandidate& cand : candidates) {
        bool duplicate = false;
        for (const SubstitutionCandidate& kept : out)
            if (kept.substitution == cand.substitution) {
                duplicate = true;
                break;
            }
        if (!duplicate) out.push_back(std::move(cand));
    }
    return out;
}

std::vector<SubstitutionCandidate> find_substitution_candidates(
    const std::vector<Precondition>& pre, const KnowledgeState& e, const Substitution& sigma) {
    std::vector<SubstitutionCandidate> candidates =
        enumerate_substitution_candidates(pre, e, sigma);

    // Maximality: drop candidates subsumed by another survivor; of two
    // mutually subsuming candidates the earlier one wins.
    std::vector<bool> dropped(candidates.size(), false);
    for (std::size_t b = 0; b < candidates.size(); ++b) {
        for (std::size_t a = 0; a < candidates.size() && !dropped[b]; ++a) {
            if (a == b || dropped[a]) continue;
            if (!subsumes(candidates[a], candidates[b])) continue;
            if (subsumes(candidates[b], candidates[a]) && a > b) continue;
            dropped[b] = true;
        }
    }

    std::vector<SubstitutionCandidate> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!dropped[i]) out.push_back(std::move(candidates[i]));
    return out;
}

std::vector<Substitution> find_substitutions(const std::vector<Precondition>& pre,
                                             const KnowledgeState& e, const Substitution& sigma) {
    std::vector<Substitution> out;
    for (SubstitutionCandidate& c : find_substitution_candidates(pre, e, sigma))
        out.push_back(std::move(c.substitution));
    return out;
}

AssumptionKind classify(const Precondition& applied, const KnowledgeState& e) {
    if (std::holds_alternative<Constraint>(applied)) return AssumptionKind::ConstraintViolation;
    const Literal& l = std::get<Literal>(applied);
    if (e.contains(l.negated())) return AssumptionKind::FactNegation;
    return AssumptionKind::Hypothesis;
}

std::vector<Assumption> generate_assumptions(const std::vector<Precondition>& pre,
                                             const Substitution& sigma, const KnowledgeState& e) {
    std::vector<Assumption> out;
    std::vector<Assumption> seen_canonical;
    for (const Precondition& p : pre) {
        Precondition applied = abp::apply(p, sigma);
        if (const auto* lit = std::get_if<Literal>(&applied)) {
            if (e.contains(*lit)) continue;
        } else if (eval_constraint(std::get<Constraint>(applied)) == ConstraintEval::Satisfied) {
            continue;
        }
        AssumptionKind kind = classify(applied, e);
        Assumption a(kind, std::move(applied));
        Assumption canon = canonicalize(a);
        if (std::find(seen_canonical.begin(), seen_canonical.end(), canon) !=
            seen_canonical.end())
            continue;
        seen_canonical.push_back(std::move(canon));
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Assumption> generate_assumptions(const Operator& op, const Substitution& sigma,
                                             const KnowledgeState& e) {
    return generate_assumptions(op.pre, sigma, e);
}

std::vector<Assumption> generate_assumptions(const Method& m, const Substitution& sigma,
                                             const KnowledgeState& e) {
    return generate_assumptions(m.pre, sigma, e);
}

bool assumptions_support(const std::vector<Precondition>& pre, const Substitution& sigma,
                         const KnowledgeState& augmented, const std::vector<Assumption>& h) {
    // An assumed literal withdrawn by a contradictory sibling assumption
    // means the set was never internally consistent.
    for (const Assumption& a : h)
        if (const auto* lit = std::get_if<Literal>(&a.content))
            if (!augmented.contains(*lit)) return false;

    std::vector<Precondition> declared;
    declared.reserve(h.size());
    for (const Assumption& a : h) declared.push_back(canonicalize(a.content));
    auto is_declared = [&](const Precondition& applied) {
        Precondition canon = canonicalize(applied);
        return std::find(declared.begin(), declared.end(), canon) != declared.end();
    };
    for (const Precondition& p : pre) {
        Precondition applied = abp::apply(p, sigma);
        if (const auto* lit = std::get_if<Literal>(&applied)) {
            if (augmented.contains(*lit)) continue;
        } else if (eval_constraint(std::get<Constraint>(applied)) == ConstraintEval::Satisfied) {
            continue;
        }
        if (!is_declared(applied)) return false;
    }
    return true;
}

bool is_legal(const Assumption& a, const Domain& d) {
    if (const auto* lit = std::get_if<Literal>(&a.content))
        return d.hypothetical.count(lit->predicate) > 0;
    return d.hypothetical.count(to_token(std::get<Constraint>(a.content).op)) > 0;
}

namespace {

std::optional<Rational> witness_for(CmpOp op, const Rational& bound, bool variable_on_left) {
    switch (op) {
        case CmpOp::Le:
        case CmpOp::Eq:
        case CmpOp::Ge:
            return bound;
        case CmpOp::Ne:
            return bound + Rational(1);
        case CmpOp::Lt:
            return variable_on_left ? bound - Rational(1) : bound + Rational(1);
        case CmpOp::Gt:
            return variable_on_left ? bound + Rational(1) : bound - Rational(1);
    }
    return std::nullopt;
}

}  // namespace

std::pair<std::vector<Assumption>, Substitution> resolve_undetermined_constraints(
    std::vector<Assumption> assumptions, Substitution sigma) {
    std::vector<std::string> hypothesis_vars;
    for (const Assumption& a : assumptions)
        if (a.kind == AssumptionKind::Hypothesis)
            collect_variables(a.content, hypothesis_vars);
    if (hypothesis_vars.empty()) return {std::move(assumptions), std::move(sigma)};

    std::vector<Assumption> kept;
    for (Assumption& a : assumptions) {
        if (a.kind != AssumptionKind::ConstraintViolation) {
            kept.push_back(std::move(a));
            continue;
        }
        Constraint c = apply(std::get<Constraint>(a.content), sigma);
        ConstraintEval ev = eval_constraint(c);
        if (ev == ConstraintEval::Satisfied) continue;  // discharged by an earlier witness
        if (ev == ConstraintEval::Violated) {
            kept.push_back(Assumption(a.kind, std::move(c)));
            continue;
        }
        std::vector<std::string> vars;
        c.collect_variables(vars);
        bool all_hypothetical = std::all_of(vars.begin(), vars.end(), [&](const std::string& v) {
            return std::find(hypothesis_vars.begin(), hypothesis_vars.end(), v) !=
                   hypothesis_vars.end();
        });
        bool solved = false;
        if (all_hypothetical) {
            bool var_left = c.lhs.is_variable() && c.rhs.is_number();
            bool var_right = c.rhs.is_variable() && c.lhs.is_number();
            if (var_left || var_right) {
                const Term& var = var_left ? c.lhs : c.rhs;
                const Rational& bound = (var_left ? c.rhs : c.lhs).value();
                if (auto w = witness_for(c.op, bound, var_left)) {
                    sigma = sigma.extended(var.name(), Term::number(*w));
                    solved = true;
                }
            }
        }
        if (!solved) kept.push_back(Assumption(a.kind, std::move(c)));
    }

    // Ground the surviving assumptions with any witnesses found, then drop
    // renaming-equal duplicates the grounding may have produced.
    std::vector<Assumption> out;
    std::vector<Assumption> seen_canonical;
    for (Assumption& a : kept) {
        Assumption grounded(a.kind, abp::apply(a.content, sigma));
        Assumption canon = canonicalize(grounded);
        if (std::find(seen_canonical.begin(), seen_canonical.end(), canon) !=
            seen_canonical.end())
            continue;
        seen_canonical.push_back(std::move(canon));
        out.push_back(std::move(grounded));
    }
    return {std::move(out), std::move(sigma)};
}

}  // namespace abp
