#include "abp/planner.hpp"

#include <algorithm>

namespace abp {

PlanReport plan(const Domain& d, const Problem& p, const SearchConfig& cfg) {
    validate_problem(p, d);
    SearchOutcome outcome = find_conjecture(p.init, d, p.goals, cfg);
    PlanReport report;
    report.status = outcome.status;
    report.stats = outcome.stats;
    if (outcome.conjecture) {
        ValidationReport check = validate(*outcome.conjecture, p.init, d);
        if (!check.valid)
            throw std::logic_error("search returned a conjecture that fails replay validation");
        report.conjecture = std::move(outcome.conjecture);
    }
    return report;
}

PlanReport plan_widening(const Domain& d, const Problem& p, SearchConfig cfg) {
    const std::optional<int> ceiling = cfg.max_assumptions;
    const std::uint64_t budget = cfg.node_budget;
    PlanReport report;
    SearchStats total;
    for (int bound = 0;; ++bound) {
        if (ceiling && bound > *ceiling) break;
        cfg.max_assumptions = bound;
        cfg.node_budget = budget > total.expansions ? budget - total.expansions : 0;
        report = plan(d, p, cfg);
        total.expansions += report.stats.expansions;
        total.max_frontier = std::max(total.max_frontier, report.stats.max_frontier);
        total.tree_size += report.stats.tree_size;
        total.elapsed_ms += report.stats.elapsed_ms;
        total.pruned_by_depth = total.pruned_by_depth || report.stats.pruned_by_depth;
        total.pruned_by_assumption_bound = report.stats.pruned_by_assumption_bound;
        if (report.status == SearchStatus::Solved ||
            report.status == SearchStatus::BudgetExhausted)
            break;
        // If the assumption bound never cut a branch, raising it changes
        // nothing: the absence holds for every bound.
        if (!report.stats.pruned_by_assumption_bound) break;
    }
    report.stats = total;
    return report;
}

namespace {

std::vector<Literal> assumption_literals(const std::vector<Assumption>& assumptions) {
    std::vector<Literal> out;
    for (const Assumption& a : assumptions)
        if (const auto* lit = std::get_if<Literal>(&a.content)) out.push_back(*lit);
    return out;
}

// The validator's own precondition matcher: literals must unify with a fact
// of the assumption-augmented state, constraints must evaluate satisfied, and
// anything left over must appear (up to renaming) among the step's declared
// assumptions. Backtracks over fact choices; declared-assumption coverage is
// tried only after every unification choice is exhausted.
struct StepMatcher {
    const std::vector<Precondition>& pre;
    const KnowledgeState& state;
    const std::vector<Precondition>& declared;  // canonicalized

    int deepest = -1;
    Precondition deepest_failure;

    bool covered(const Precondition& applied) const {
        Precondition canon = canonicalize(applied);
        return std::find(declared.begin(), declared.end(), canon) != declared.end();
    }

    bool run(std::size_t k, const Substitution& theta, Substitution& out) {
        if (k == pre.size()) {
            out = theta;
            return true;
        }
        const Precondition& p = pre[k];
        if (const auto* lit = std::get_if<Literal>(&p)) {
            for (const Literal& fact : state.facts()) {
                auto next = unify(*lit, fact, theta);
                if (next && run(k + 1, *next, out)) return true;
            }
            if (covered(abp::apply(p, theta)) && run(k + 1, theta, out)) return true;
        } else {
            Constraint c = apply(std::get<Constraint>(p), theta);
            if (eval_constraint(c) == ConstraintEval::Satisfied) return run(k + 1, theta, out);
            if (covered(c) && run(k + 1, theta, out)) return true;
        }
        if (static_cast<int>(k) > deepest) {
            deepest = static_cast<int>(k);
            deepest_failure = abp::apply(p, theta);
        }
        return false;
    }
};

}  // namespace

ValidationReport validate(const Conjecture& chi, const KnowledgeState& e, const Domain& d) {
    ValidationReport report;
    report.trajectory.push_back(e);

    KnowledgeState current = e;
    std::uint64_t rename_counter = 0;
    int index = 0;
    for (const ConjectureStep& step : chi.steps) {
        ++index;
        const Operator* op = d.find_operator(step.action.name);
        if (!op) throw std::invalid_argument("unresolvable action " + step.action.surface_name());
        if (op->params.size() != step.action.args.size())
            throw std::invalid_argument("arity mismatch for action " +
                                        step.action.surface_name());

        // Assumptions license the step: hypotheses and negations enter the
        // state before the precondition check.
        current = consistent_union(current, assumption_literals(step.assumptions));

        const std::string suffix = "~v" + std::to_string(rename_counter++);
        std::map<std::string, Term> seed;
        for (std::size_t i = 0; i < op->params.size(); ++i) {
            const Term& arg = step.action.args[i];
            if (arg.is_variable() && arg.name() == op->params[i] + suffix) continue;
            seed.emplace(op->params[i] + suffix, arg);
        }

        // Rename operator variables apart from whatever the conjecture uses.
        struct {
            std::string suffix;
            Term operator()(const Term& t) const {
                switch (t.kind()) {
                    case Term::Kind::Variable: return Term::variable(t.name() + suffix);
                    case Term::Kind::Constant:
                    case Term::Kind::Number: return t;
                    case Term::Kind::Arith:
                        return Term::arith(t.op(), (*this)(t.lhs()), (*this)(t.rhs()));
                }
                return t;
            }
        } rename{suffix};
        std::vector<Precondition> pre;
        pre.reserve(op->pre.size());
        for (const Precondition& raw : op->pre) {
            Precondition p = raw;
            if (auto* lit = std::get_if<Literal>(&p)) {
                for (Term& t : lit->args) t = rename(t);
            } else {
                auto& c = std::get<Constraint>(p);
                c.lhs = rename(c.lhs);
                c.rhs = rename(c.rhs);
            }
            pre.push_back(std::move(p));
        }

        std::vector<Precondition> declared;
        for (const Assumption& a : step.assumptions) declared.push_back(canonicalize(a.content));

        StepMatcher matcher{pre, current, declared, -1, Literal()};
        Substitution theta;
        bool ok = matcher.run(0, Substitution::from_bindings(std::move(seed)), theta);
        if (!ok) {
            report.valid = false;
            Precondition missing =
                matcher.deepest >= 0 ? matcher.deepest_failure : Precondition(Literal());
            report.first_failure = std::make_pair(index, std::move(missing));
            return report;
        }

        struct {
            std::string suffix;
            const Substitution& theta;
            Literal operator()(const Literal& l) const {
                Literal out = l;
                for (Term& t : out.args) {
                    Term renamed = rename_var(t);
                    t = apply(renamed, theta);
                }
                return out;
            }
            Term rename_var(const Term& t) const {
                switch (t.kind()) {
                    case Term::Kind::Variable: return Term::variable(t.name() + suffix);
                    case Term::Kind::Constant:
                    case Term::Kind::Number: return t;
                    case Term::Kind::Arith:
                        return Term::arith(t.op(), rename_var(t.lhs()), rename_var(t.rhs()));
                }
                return t;
            }
        } instantiate{suffix, theta};

        for (const Literal& l : op->del) current = current.erase(instantiate(l));
        for (const Literal& l : op->add) current = current.insert(instantiate(l));
        report.trajectory.push_back(current);
    }

    if (!chi.final_assumptions.empty()) {
        current = consistent_union(current, assumption_literals(chi.final_assumptions));
        report.trajectory.back() = current;
    }

    // Declared weight must account for every assumption; method-level
    // assumptions have no operator to replay against, so this bookkeeping
    // check is what catches their removal.
    std::size_t declared = chi.final_assumptions.size();
    for (const ConjectureStep& step : chi.steps) declared += step.assumptions.size();
    report.valid = declared == static_cast<std::size_t>(chi.total_weight);
    return report;
}

}  // namespace abp
