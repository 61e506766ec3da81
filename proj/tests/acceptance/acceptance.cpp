// Acceptance suite: golden examples, cross-implementation equivalences, and
// the invariant battery. Prints one PASS/FAIL line per criterion; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "abp/cli.hpp"
#include "abp/oracle.hpp"
#include "abp/parser.hpp"
#include "abp/planner.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"
#include "support/taxi.hpp"

using namespace abp;
using namespace abp::testing;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

Term cst(const std::string& n) { return Term::constant(n); }
Term num(std::int64_t n) { return Term::number(Rational(n)); }

Substitution subst(std::map<std::string, Term> bindings) {
    return Substitution::from_bindings(std::move(bindings));
}

constexpr int kSuiteInstances = 500;
constexpr std::uint32_t kSuiteBase = kSuiteSeed + 100000;

Instance suite_instance(int i) { return random_instance(kSuiteBase + (std::uint32_t)i); }

SearchConfig suite_config(int max_assumptions) {
    SearchConfig cfg;
    if (max_assumptions >= 0) cfg.max_assumptions = max_assumptions;
    cfg.max_depth = 5;
    cfg.node_budget = 200000;
    return cfg;
}

// ---- criterion 1: three substitutions for the loaded drive -----------------

bool criterion_substitutions(std::string& detail) {
    auto sigmas = find_substitutions(move_loaded_pre(), fleet_state(), Substitution());
    std::vector<Substitution> expected{
        subst({{"t", cst("cab38")}, {"x", cst("downtown")}, {"q", num(10)}}),
        subst({{"t", cst("cab74")}, {"x", cst("downtown")}, {"q", num(5)}}),
        subst({{"t", cst("cab73")}, {"x", cst("downtown")}})};
    if (sigmas.size() != expected.size()) {
        detail = "expected 3 substitutions, got " + std::to_string(sigmas.size());
        return false;
    }
    for (const Substitution& want : expected) {
        if (std::find(sigmas.begin(), sigmas.end(), want) == sigmas.end()) {
            detail = "missing substitution " + want.to_string();
            return false;
        }
    }
    return true;
}

// ---- criterion 2: assumption generation on the fleet state -----------------

bool criterion_assumption_sets(std::string& detail) {
    const KnowledgeState e = fleet_state();
    const auto& pre = move_loaded_pre();

    auto a = generate_assumptions(
        pre, subst({{"t", cst("cab38")}, {"x", cst("downtown")}, {"q", num(10)}}), e);
    if (!a.empty()) {
        detail = "full-match substitution produced assumptions";
        return false;
    }

    auto b = generate_assumptions(
        pre, subst({{"t", cst("cab74")}, {"x", cst("downtown")}, {"q", num(5)}}), e);
    bool b_ok = b.size() == 2 && b[0].kind == AssumptionKind::FactNegation &&
                std::get<Literal>(b[0].content) == Literal("isloaded", {cst("cab74")}) &&
                b[1].kind == AssumptionKind::ConstraintViolation &&
                std::get<Constraint>(b[1].content) == Constraint(CmpOp::Ge, num(5), num(10));
    if (!b_ok) {
        detail = "fact-negation substitution mismatch";
        return false;
    }

    auto c = generate_assumptions(pre, subst({{"t", cst("cab73")}, {"x", cst("downtown")}}), e);
    // compared up to variable renaming
    bool c_ok =
        c.size() == 3 && c[0].kind == AssumptionKind::Hypothesis &&
        canonicalize(c[0].content) ==
            canonicalize(Precondition(Literal("hasfuel", {cst("cab73"), Term::variable("v")}))) &&
        c[1].kind == AssumptionKind::Hypothesis &&
        std::get<Literal>(c[1].content) == Literal("isloaded", {cst("cab73")}) &&
        c[2].kind == AssumptionKind::ConstraintViolation &&
        canonicalize(c[2].content) ==
            canonicalize(Precondition(Constraint(CmpOp::Ge, Term::variable("v"), num(10))));
    if (!c_ok) {
        detail = "hypothesis substitution mismatch";
        return false;
    }

    // the open fuel variable is shared between the hypothesis and the
    // constraint
    std::vector<std::string> hyp_vars, cons_vars;
    std::get<Literal>(c[0].content).collect_variables(hyp_vars);
    std::get<Constraint>(c[2].content).collect_variables(cons_vars);
    if (hyp_vars != cons_vars) {
        detail = "open fuel variable not shared";
        return false;
    }
    return true;
}

// ---- criterion 3: classical taxi plan --------------------------------------

bool criterion_classical_plan(std::string& detail) {
    Problem p = taxi_problem();
    PlanReport report = plan(taxi_domain(), p, SearchConfig());
    if (!report.solved() || report.conjecture->total_weight != 0 ||
        report.conjecture->steps.size() != 3) {
        detail = "expected a weight-0 three-step plan";
        return false;
    }
    const auto& steps = report.conjecture->steps;
    if (steps[0].action.to_string() != "(!load fred cab38 downtown)" ||
        steps[1].action.to_string() != "(!move cab38 downtown park)" ||
        steps[2].action.to_string() != "(!unload fred cab38 park)") {
        detail = "unexpected action sequence";
        return false;
    }
    ValidationReport check = validate(*report.conjecture, p.init, taxi_domain());
    if (!check.valid || check.trajectory.size() != 4 ||
        !check.trajectory.back().contains(Literal("at", {cst("fred"), cst("park")}))) {
        detail = "validation did not reach at(fred, park)";
        return false;
    }
    return true;
}

// ---- criterion 4: single-assumption conjecture without fuel ----------------

bool criterion_fuel_hypothesis(std::string& detail) {
    Problem p = taxi_nofuel_problem();
    SearchConfig cfg;
    cfg.max_assumptions = 1;
    PlanReport report = plan(taxi_domain(), p, cfg);
    if (!report.solved() || report.conjecture->total_weight != 1) {
        detail = "expected a weight-1 conjecture";
        return false;
    }
    if (report.conjecture->steps.size() != 3) {
        detail = "expected three steps";
        return false;
    }
    const ConjectureStep& move = report.conjecture->steps[1];
    if (move.assumptions.size() != 1) {
        detail = "move step must carry exactly one assumption";
        return false;
    }
    const auto* lit = std::get_if<Literal>(&move.assumptions[0].content);
    if (!lit || lit->predicate != "hasfuel") {
        detail = "assumption predicate must be hasfuel";
        return false;
    }
    return true;
}

// ---- criterion 5: bound-0 equivalence with plain decomposition -------------

bool criterion_shop_equivalence(std::string& detail) {
    for (int i = 0; i < kSuiteInstances; ++i) {
        Instance inst = suite_instance(i);
        PlanReport report = plan(inst.domain, inst.problem, suite_config(0));
        auto reference = plain_htn(inst.problem.init, inst.domain, inst.problem.goals, 5);
        if (report.status == SearchStatus::BudgetExhausted) {
            detail = "budget exhausted on instance " + std::to_string(i);
            return false;
        }
        if (report.solved() != reference.has_value()) {
            detail = "solvability disagreement on instance " + std::to_string(i);
            return false;
        }
        if (report.solved() && report.conjecture->actions() != *reference) {
            detail = "action sequence disagreement on instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 6: optimal weights against the exhaustive oracle ------------

bool criterion_oracle_optimality(std::string& detail) {
    for (int i = 0; i < kSuiteInstances; ++i) {
        Instance inst = suite_instance(i);
        PlanReport report = plan(inst.domain, inst.problem, suite_config(3));
        OracleResult oracle =
            brute_force(inst.problem.init, inst.domain, inst.problem.goals, 5, 3);
        if (report.status == SearchStatus::BudgetExhausted) {
            detail = "budget exhausted on instance " + std::to_string(i);
            return false;
        }
        if (report.solved() != oracle.min_weight.has_value()) {
            detail = "solvability disagreement on instance " + std::to_string(i);
            return false;
        }
        if (report.solved() && report.conjecture->total_weight != *oracle.min_weight) {
            detail = "weight " + std::to_string(report.conjecture->total_weight) + " vs oracle " +
                     std::to_string(*oracle.min_weight) + " on instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 7: invariant battery ----------------------------------------

bool criterion_invariants(std::string& detail) {
    // weight monotonicity and state consistency over fully expanded trees
    for (int i = 0; i < 80; ++i) {
        Instance inst = suite_instance(i);
        SearchConfig cfg = suite_config(3);
        cfg.max_depth = 4;
        ConjectureTree tree(inst.problem.init, inst.problem.goals, inst.domain, cfg);
        for (;;) {
            int ni = tree.select_best();
            if (ni < 0) break;
            if (tree.node(ni).remaining.empty()) continue;
            tree.expand(ni);
        }
        for (std::size_t n = 1; n < tree.size(); ++n) {
            const ConjectureNode& node = tree.node(static_cast<int>(n));
            const ConjectureNode& parent = tree.node(node.parent);
            if (node.weight < parent.weight ||
                node.weight !=
                    parent.weight + static_cast<int>(node.in_edge->assumptions.size())) {
                detail = "weight monotonicity violated on instance " + std::to_string(i);
                return false;
            }
            for (const Literal& l : node.state.facts())
                if (node.state.contains(l.negated())) {
                    detail = "inconsistent state on instance " + std::to_string(i);
                    return false;
                }
        }
    }

    // most-general-unifier property over 10^4 random pairs
    Rng rng(kSuiteSeed + 77);
    for (int iter = 0; iter < 10000; ++iter) {
        Literal p = random_small_literal(rng);
        Literal e = random_small_literal(rng);
        auto theta = unify(p, e, Substitution());
        if (theta && apply(p, *theta) != apply(e, *theta)) {
            detail = "unifier does not equalize its inputs";
            return false;
        }
        std::vector<std::string> vars;
        p.collect_variables(vars);
        e.collect_variables(vars);
        if (vars.size() > 3) continue;
        for (const Substitution& g : all_groundings(vars)) {
            if (apply(p, g) != apply(e, g)) continue;
            if (!theta) {
                detail = "unify failed although a unifier exists";
                return false;
            }
            if (!instance_of(*theta, g)) {
                detail = "returned unifier is not most general";
                return false;
            }
        }
    }

    // plan/validate agreement plus mutation detection
    int mutations = 0, flagged = 0;
    for (int i = 0; i < 150; ++i) {
        Instance inst = suite_instance(i);
        PlanReport report = plan(inst.domain, inst.problem, suite_config(3));
        if (!report.solved()) continue;
        ValidationReport check = validate(*report.conjecture, inst.problem.init, inst.domain);
        if (!check.valid) {
            detail = "planned conjecture failed validation on instance " + std::to_string(i);
            return false;
        }
        for (const KnowledgeState& state : check.trajectory)
            for (const Literal& l : state.facts())
                if (state.contains(l.negated())) {
                    detail = "inconsistent trajectory state on instance " + std::to_string(i);
                    return false;
                }
        const Conjecture& chi = *report.conjecture;
        for (std::size_t si = 0; si < chi.steps.size(); ++si) {
            for (std::size_t ai = 0; ai < chi.steps[si].assumptions.size(); ++ai) {
                Conjecture mutated = chi;
                mutated.steps[si].assumptions.erase(mutated.steps[si].assumptions.begin() + ai);
                ++mutations;
                if (!validate(mutated, inst.problem.init, inst.domain).valid) ++flagged;
            }
        }
    }
    // structured taxi mutations: drop, swap, retarget
    {
        Problem nofuel = taxi_nofuel_problem();
        SearchConfig cfg;
        cfg.max_assumptions = 1;
        Conjecture chi = *plan(taxi_domain(), nofuel, cfg).conjecture;
        auto mutate = [&](Conjecture m) {
            ++mutations;
            if (!validate(m, nofuel.init, taxi_domain()).valid) ++flagged;
        };
        Conjecture drop = chi;
        drop.steps[1].assumptions.clear();
        mutate(drop);
        for (std::size_t i = 0; i + 1 < chi.steps.size(); ++i) {
            Conjecture m = chi;
            std::swap(m.steps[i], m.steps[i + 1]);
            mutate(m);
        }
        for (std::size_t si = 0; si < chi.steps.size(); ++si)
            for (std::size_t ai = 0; ai < chi.steps[si].action.args.size(); ++ai) {
                Conjecture m = chi;
                m.steps[si].action.args[ai] = cst("elsewhere");
                mutate(m);
            }
    }
    if (mutations == 0 || flagged * 100 < mutations * 95) {
        detail = "mutation detection rate " + std::to_string(flagged) + "/" +
                 std::to_string(mutations) + " below 95%";
        return false;
    }
    return true;
}

// ---- criterion 8: byte-identical outputs -----------------------------------

bool criterion_determinism(std::string& detail) {
    auto cli = [&](std::vector<std::string> args) {
        std::ostringstream out, err;
        run_cli(args, out, err);
        return out.str();
    };
    std::string dir = domains_dir();
    std::vector<std::vector<std::string>> golden_runs{
        {"plan", dir + "/taxi.abp", dir + "/taxi.p"},
        {"plan", dir + "/taxi.abp", dir + "/taxi-nofuel.p", "--max-assumptions", "1"},
        {"plan", dir + "/taxi.abp", dir + "/taxi-nofuel.p", "--max-assumptions", "0"},
        {"plan", dir + "/taxi-loaded.abp", dir + "/taxi-fleet.p"},
        {"plan", dir + "/taxi.abp", dir + "/taxi-nofuel.p", "--widen-assumptions", "--format",
         "json"},
        {"oracle", dir + "/taxi.abp", dir + "/taxi-nofuel.p", "--depth", "8", "--weight", "2"},
    };
    for (std::size_t i = 0; i < golden_runs.size(); ++i) {
        if (cli(golden_runs[i]) != cli(golden_runs[i])) {
            detail = "golden run " + std::to_string(i) + " not byte-identical";
            return false;
        }
    }
    for (int i = 0; i < 50; ++i) {
        Instance inst = suite_instance(i);
        auto serialize = [&] {
            PlanReport report = plan(inst.domain, inst.problem, suite_config(3));
            if (!report.solved()) return std::string("unsolved");
            return to_sexpr(*report.conjecture) + "\n" + to_json(*report.conjecture);
        };
        if (serialize() != serialize()) {
            detail = "random instance " + std::to_string(i) + " not byte-identical";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "three maximal substitutions on the seven-fact fleet state", criterion_substitutions},
        {2, "the three fleet substitutions yield the expected assumption sets", criterion_assumption_sets},
        {3, "classical taxi plan: load, move, unload reaching at(fred, park)",
         criterion_classical_plan},
        {4, "fuel-less taxi yields a weight-1 hasfuel hypothesis", criterion_fuel_hypothesis},
        {5, "bound-0 search equals plain decomposition on 500 seeded domains",
         criterion_shop_equivalence},
        {6, "conjecture weights match the exhaustive oracle on 500 seeded domains",
         criterion_oracle_optimality},
        {7, "invariant battery: monotonicity, MGU, replay agreement, consistency",
         criterion_invariants},
        {8, "byte-identical outputs across repeated runs", criterion_determinism},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[criterion %d] %s — %s (%lld ms)%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.title.c_str(), static_cast<long long>(ms), detail.empty() ? "" : ": ",
                    detail.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
