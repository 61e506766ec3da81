#include "abp/oracle.hpp"

#include <algorithm>

namespace abp {

namespace {

constexpr int kMaxDepthBound = 12;
constexpr int kMaxWeightBound = 6;

Term rename_term(const Term& t, const std::string& suffix) {
    switch (t.kind()) {
        case Term::Kind::Variable: return Term::variable(t.name() + suffix);
        case Term::Kind::Constant:
        case Term::Kind::Number: return t;
        case Term::Kind::Arith:
            return Term::arith(t.op(), rename_term(t.lhs(), suffix),
                               rename_term(t.rhs(), suffix));
    }
    return t;
}

Literal rename_literal(const Literal& l, const std::string& suffix) {
    Literal out = l;
    for (Term& t : out.args) t = rename_term(t, suffix);
    return out;
}

Precondition rename_precondition(const Precondition& p, const std::string& suffix) {
    if (const auto* lit = std::get_if<Literal>(&p)) return rename_literal(*lit, suffix);
    const auto& c = std::get<Constraint>(p);
    return Constraint(c.op, rename_term(c.lhs, suffix), rename_term(c.rhs, suffix));
}

Task rename_task(const Task& t, const std::string& suffix) {
    Task out = t;
    for (Term& a : out.args) a = rename_term(a, suffix);
    return out;
}

Substitution bind_params(const std::vector<std::string>& params, const std::vector<Term>& args,
                         const std::string& suffix) {
    std::map<std::string, Term> bindings;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const Term& arg = args[i];
        if (arg.is_variable() && arg.name() == params[i] + suffix) continue;
        bindings.emplace(params[i] + suffix, arg);
    }
    return Substitution::from_bindings(std::move(bindings));
}

std::vector<Literal> assumed_literals(const std::vector<Assumption>& assumptions) {
    std::vector<Literal> out;
    for (const Assumption& a : assumptions)
        if (const auto* lit = std::get_if<Literal>(&a.content)) out.push_back(*lit);
    return out;
}

// Raw substitution enumeration: every precondition either unifies with some
// fact or is skipped, in order, with no filtering of dominated choices.
void enumerate_raw(const std::vector<Precondition>& pre, std::size_t k, const KnowledgeState& e,
                   const Substitution& sigma, std::vector<Substitution>& out) {
    if (k == pre.size()) {
        out.push_back(sigma);
        return;
    }
    if (const auto* lit = std::get_if<Literal>(&pre[k])) {
        for (const Literal& fact : e.facts()) {
            auto theta = unify(*lit, fact, sigma);
            if (theta) enumerate_raw(pre, k + 1, e, *theta, out);
        }
    }
    enumerate_raw(pre, k + 1, e, sigma, out);  // skip branch
}

struct BruteSearch {
    const Domain& domain;
    int depth_bound;
    int weight_bound;

    OracleResult result;
    std::vector<Conjecture> canonical_witnesses;
    std::uint64_t rename_counter = 0;

    // Execution-order conjecture assembly shared by all branches.
    std::vector<ConjectureStep> steps;
    std::vector<Assumption> pending;

    void record(int weight) {
        Conjecture chi;
        chi.steps = steps;
        chi.final_assumptions = pending;
        chi.total_weight = weight;
        Conjecture canon = canonicalize(chi);
        if (!result.min_weight || weight < *result.min_weight) {
            result.min_weight = weight;
            result.witnesses.clear();
            canonical_witnesses.clear();
        }
        if (weight == *result.min_weight) {
            if (std::find(canonical_witnesses.begin(), canonical_witnesses.end(), canon) ==
                canonical_witnesses.end()) {
                canonical_witnesses.push_back(canon);
                result.witnesses.push_back(std::move(canon));
            }
        }
    }

    void run(const KnowledgeState& state, const std::vector<Task>& tasks, int weight, int depth) {
        ++result.explored;
        if (tasks.empty()) {
            record(weight);
            return;
        }
        if (depth >= depth_bound) return;
        // Weight never decreases along a branch, so strictly heavier prefixes
        // cannot reach a minimal witness. Equal-weight prefixes stay live.
        if (result.min_weight && weight > *result.min_weight) return;

        const Task alpha = tasks.front();
        const std::vector<Task> rest(tasks.begin() + 1, tasks.end());

        if (alpha.primitive) {
            const Operator* op = domain.find_operator(alpha.name);
            if (!op || op->params.size() != alpha.args.size()) return;
            branch(state, alpha, rest, op->pre, &*op, nullptr, weight, depth);
        } else {
            for (const Method* m : domain.find_methods(alpha.name)) {
                if (m->params.size() != alpha.args.size()) continue;
                branch(state, alpha, rest, m->pre, nullptr, m, weight, depth);
            }
        }
    }

    void branch(const KnowledgeState& state, const Task& alpha, const std::vector<Task>& rest,
                const std::vector<Precondition>& raw_pre, const Operator* op, const Method* m,
                int weight, int depth) {
        const std::string suffix = "~o" + std::to_string(rename_counter++);
        std::vector<Precondition> pre;
        for (const Precondition& p : raw_pre) pre.push_back(rename_precondition(p, suffix));
        Substitution seed =
            bind_params(op ? op->params : m->params, alpha.args, suffix);

        std::vector<Substitution> sigmas;
        enumerate_raw(pre, 0, state, seed, sigmas);

        for (const Substitution& sigma : sigmas) {
            auto [assumptions, theta] =
                resolve_undetermined_constraints(generate_assumptions(pre, sigma, state), sigma);
            if (!std::all_of(assumptions.begin(), assumptions.end(),
                             [&](const Assumption& a) { return is_legal(a, domain); }))
                continue;
            int new_weight = weight + static_cast<int>(assumptions.size());
            if (new_weight > weight_bound) continue;

            KnowledgeState augmented = consistent_union(state, assumed_literals(assumptions));
            if (!assumptions_support(pre, theta, augmented, assumptions)) continue;
            if (op) {
                KnowledgeState next = augmented;
                for (const Literal& l : op->del)
                    next = next.erase(apply(rename_literal(l, suffix), theta));
                for (const Literal& l : op->add)
                    next = next.insert(apply(rename_literal(l, suffix), theta));

                ConjectureStep step;
                step.assumptions = pending;
                step.assumptions.insert(step.assumptions.end(), assumptions.begin(),
                                        assumptions.end());
                step.action = Task(true, op->name, abp::apply(alpha.args, theta));

                std::vector<Assumption> saved_pending = std::move(pending);
                pending.clear();
                steps.push_back(std::move(step));
                run(next, abp::apply(rest, theta), new_weight, depth + 1);
                steps.pop_back();
                pending = std::move(saved_pending);
            } else {
                std::vector<Task> remaining;
                remaining.reserve(m->act.size() + rest.size());
                for (const Task& t : m->act)
                    remaining.push_back(apply(rename_task(t, suffix), theta));
                for (const Task& t : rest) remaining.push_back(apply(t, theta));

                std::size_t mark = pending.size();
                pending.insert(pending.end(), assumptions.begin(), assumptions.end());
                run(augmented, remaining, new_weight, depth + 1);
                pending.resize(mark);
            }
        }
    }
};

// Classical decomposition: every literal precondition must unify with a
// fact, every constraint must be satisfied under the final bindings.
struct ClassicalSearch {
    const Domain& domain;
    int depth_bound;
    std::uint64_t rename_counter = 0;

    bool run(const KnowledgeState& state, const std::vector<Task>& tasks, int depth,
             std::vector<Task>& plan) {
        if (tasks.empty()) return true;
        if (depth >= depth_bound) return false;

        const Task alpha = tasks.front();
        const std::vector<Task> rest(tasks.begin() + 1, tasks.end());

        if (alpha.primitive) {
            const Operator* op = domain.find_operator(alpha.name);
            if (!op || op->params.size() != alpha.args.size()) return false;
            const std::string suffix = "~c" + std::to_string(rename_counter++);
            std::vector<Precondition> pre;
            for (const Precondition& p : op->pre) pre.push_back(rename_precondition(p, suffix));
            Substitution seed = bind_params(op->params, alpha.args, suffix);
            return try_matches(pre, state, seed, [&](const Substitution& theta) {
                KnowledgeState next = state;
                for (const Literal& l : op->del)
                    next = next.erase(apply(rename_literal(l, suffix), theta));
                for (const Literal& l : op->add)
                    next = next.insert(apply(rename_literal(l, suffix), theta));
                plan.push_back(Task(true, op->name, abp::apply(alpha.args, theta)));
                if (run(next, abp::apply(rest, theta), depth + 1, plan)) return true;
                plan.pop_back();
                return false;
            });
        }
        for (const Method* m : domain.find_methods(alpha.name)) {
            if (m->params.size() != alpha.args.size()) continue;
            const std::string suffix = "~c" + std::to_string(rename_counter++);
            std::vector<Precondition> pre;
            for (const Precondition& p : m->pre) pre.push_back(rename_precondition(p, suffix));
            Substitution seed = bind_params(m->params, alpha.args, suffix);
            bool found = try_matches(pre, state, seed, [&](const Substitution& theta) {
                std::vector<Task> remaining;
                remaining.reserve(m->act.size() + rest.size());
                for (const Task& t : m->act)
                    remaining.push_back(apply(rename_task(t, suffix), theta));
                for (const Task& t : rest) remaining.push_back(apply(t, theta));
                return run(state, remaining, depth + 1, plan);
            });
            if (found) return true;
        }
        return false;
    }

    // Visits complete matches in deterministic order until `visit` accepts.
    template <typename Visit>
    bool try_matches(const std::vector<Precondition>& pre, const KnowledgeState& e,
                     const Substitution& seed, Visit&& visit) {
        return try_matches_rec(pre, 0, e, seed, {}, visit);
    }

    template <typename Visit>
    bool try_matches_rec(const std::vector<Precondition>& pre, std::size_t k,
                         const KnowledgeState& e, const Substitution& sigma,
                         std::vector<const Constraint*> deferred, Visit&& visit) {
        if (k == pre.size()) {
            for (const Constraint* c : deferred)
                if (eval_constraint(apply(*c, sigma)) != ConstraintEval::Satisfied) return false;
            return visit(sigma);
        }
        if (const auto* lit = std::get_if<Literal>(&pre[k])) {
            for (const Literal& fact : e.facts()) {
                auto theta = unify(*lit, fact, sigma);
                if (theta && try_matches_rec(pre, k + 1, e, *theta, deferred, visit)) return true;
            }
            return false;
        }
        deferred.push_back(&std::get<Constraint>(pre[k]));
        return try_matches_rec(pre, k + 1, e, sigma, std::move(deferred), visit);
    }
};

}  // namespace

OracleResult brute_force(const KnowledgeState& e, const Domain& d, const std::vector<Task>& goals,
                         int depth_bound, int weight_bound) {
    if (depth_bound < 0 || depth_bound > kMaxDepthBound)
        throw OracleBoundError("brute_force depth bound must be within 0.." +
                               std::to_string(kMaxDepthBound));
    if (weight_bound < 0 || weight_bound > kMaxWeightBound)
        throw OracleBoundError("brute_force weight bound must be within 0.." +
                               std::to_string(kMaxWeightBound));
    BruteSearch search{d, depth_bound, weight_bound, {}, {}, 0, {}, {}};
    search.run(e, goals, 0, 0);
    return std::move(search.result);
}

std::optional<std::vector<Task>> plain_htn(const KnowledgeState& e, const Domain& d,
                                           const std::vector<Task>& goals, int depth_bound) {
    if (depth_bound < 0 || depth_bound > kMaxDepthBound)
        throw OracleBoundError("plain_htn depth bound must be within 0.." +
                               std::to_string(kMaxDepthBound));
    ClassicalSearch search{d, depth_bound, 0};
    std::vector<Task> plan;
    if (search.run(e, goals, 0, plan)) return plan;
    return std::nullopt;
}

}  // namespace abp
