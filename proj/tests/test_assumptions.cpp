#include <doctest.h>

#include <algorithm>

#include "abp/assumptions.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"
#include "support/taxi.hpp"

using namespace abp;
using namespace abp::testing;

namespace {

Term var(const std::string& n) { return Term::variable(n); }
Term cst(const std::string& n) { return Term::constant(n); }
Term num(std::int64_t n) { return Term::number(Rational(n)); }

Substitution subst(std::map<std::string, Term> bindings) {
    return Substitution::from_bindings(std::move(bindings));
}

bool contains_subst(const std::vector<Substitution>& xs, const Substitution& s) {
    return std::find(xs.begin(), xs.end(), s) != xs.end();
}

}  // namespace

TEST_CASE("fleet state yields exactly three substitutions for the loaded drive") {
    auto sigmas = find_substitutions(move_loaded_pre(), fleet_state(), Substitution());

    Substitution s1 = subst({{"t", cst("cab38")}, {"x", cst("downtown")}, {"q", num(10)}});
    Substitution s2 = subst({{"t", cst("cab74")}, {"x", cst("downtown")}, {"q", num(5)}});
    Substitution s3 = subst({{"t", cst("cab73")}, {"x", cst("downtown")}});

    REQUIRE(sigmas.size() == 3);
    CHECK(contains_subst(sigmas, s1));
    CHECK(contains_subst(sigmas, s2));
    CHECK(contains_subst(sigmas, s3));
}

TEST_CASE("empty preconditions yield the seed substitution") {
    Substitution seed = subst({{"t", cst("cab38")}});
    auto sigmas = find_substitutions({}, fleet_state(), seed);
    REQUIRE(sigmas.size() == 1);
    CHECK(sigmas[0] == seed);

    auto from_empty = find_substitutions({}, KnowledgeState(), Substitution());
    REQUIRE(from_empty.size() == 1);
    CHECK(from_empty[0].empty());
}

TEST_CASE("subsumption keeps only maximal substitutions") {
    // p(?x), q(?x) against {p(a), p(b), q(b)}: the all-skip branch is
    // dominated, {x->a} and {x->b} both survive
    std::vector<Precondition> pre{Literal("p", {var("x")}), Literal("q", {var("x")})};
    KnowledgeState e = KnowledgeState::from_literals(
        {Literal("p", {cst("a")}), Literal("p", {cst("b")}), Literal("q", {cst("b")})});
    auto sigmas = find_substitutions(pre, e, Substitution());
    REQUIRE(sigmas.size() == 2);
    CHECK(contains_subst(sigmas, subst({{"x", cst("b")}})));
    CHECK(contains_subst(sigmas, subst({{"x", cst("a")}})));
}

TEST_CASE("unmatched preconditions still yield the all-skip substitution") {
    std::vector<Precondition> pre{Literal("missing", {var("x")})};
    auto sigmas = find_substitutions(pre, fleet_state(), Substitution());
    REQUIRE(sigmas.size() == 1);
    CHECK(sigmas[0].empty());
}

TEST_CASE("assumption sets for the three fleet substitutions") {
    const KnowledgeState e = fleet_state();
    const auto& pre = move_loaded_pre();

    SUBCASE("a full match needs no assumptions") {
        Substitution s1 = subst({{"t", cst("cab38")}, {"x", cst("downtown")}, {"q", num(10)}});
        CHECK(generate_assumptions(pre, s1, e).empty());
    }

    SUBCASE("a contradicted fact becomes a negation, a false guard a violation") {
        Substitution s2 = subst({{"t", cst("cab74")}, {"x", cst("downtown")}, {"q", num(5)}});
        auto assumptions = generate_assumptions(pre, s2, e);
        REQUIRE(assumptions.size() == 2);
        CHECK(assumptions[0].kind == AssumptionKind::FactNegation);
        CHECK(std::get<Literal>(assumptions[0].content) == Literal("isloaded", {cst("cab74")}));
        CHECK(assumptions[1].kind == AssumptionKind::ConstraintViolation);
        CHECK(std::get<Constraint>(assumptions[1].content) ==
              Constraint(CmpOp::Ge, num(5), num(10)));
    }

    SUBCASE("an unknown cab yields open hypotheses and an undetermined guard") {
        Substitution s3 = subst({{"t", cst("cab73")}, {"x", cst("downtown")}});
        auto assumptions = generate_assumptions(pre, s3, e);
        REQUIRE(assumptions.size() == 3);
        CHECK(assumptions[0].kind == AssumptionKind::Hypothesis);
        CHECK(std::get<Literal>(assumptions[0].content) ==
              Literal("hasfuel", {cst("cab73"), var("q")}));
        CHECK(assumptions[1].kind == AssumptionKind::Hypothesis);
        CHECK(std::get<Literal>(assumptions[1].content) == Literal("isloaded", {cst("cab73")}));
        CHECK(assumptions[2].kind == AssumptionKind::ConstraintViolation);
        CHECK(std::get<Constraint>(assumptions[2].content) ==
              Constraint(CmpOp::Ge, var("q"), num(10)));
    }
}

TEST_CASE("classify") {
    const KnowledgeState e = fleet_state();
    CHECK(classify(Literal("isloaded", {cst("cab74")}), e) == AssumptionKind::FactNegation);
    CHECK(classify(Literal("hasfuel", {cst("cab73"), var("q")}), e) ==
          AssumptionKind::Hypothesis);
    CHECK(classify(Constraint(CmpOp::Ge, num(5), num(10)), e) ==
          AssumptionKind::ConstraintViolation);

    // total and mutually exclusive over random inputs
    Rng rng(kSuiteSeed + 3);
    for (int iter = 0; iter < 300; ++iter) {
        Precondition p = rng.chance(30)
                             ? Precondition(Constraint(CmpOp::Ge, random_small_term(rng),
                                                       random_small_term(rng)))
                             : Precondition(random_small_literal(rng));
        AssumptionKind k = classify(p, e);
        bool is_constraint = std::holds_alternative<Constraint>(p);
        CHECK((k == AssumptionKind::ConstraintViolation) == is_constraint);
        if (!is_constraint) {
            const Literal& l = std::get<Literal>(p);
            CHECK((k == AssumptionKind::FactNegation) == e.contains(l.negated()));
        }
    }
}

TEST_CASE("legality consults the hypothetical declaration") {
    const Domain& d = taxi_loaded_domain();
    CHECK(is_legal(Assumption(AssumptionKind::Hypothesis,
                              Literal("hasfuel", {cst("cab73"), var("q")})),
                   d));
    CHECK_FALSE(is_legal(
        Assumption(AssumptionKind::Hypothesis, Literal("at", {cst("fred"), cst("mars")})), d));
    CHECK(is_legal(Assumption(AssumptionKind::ConstraintViolation,
                              Constraint(CmpOp::Ge, var("q"), num(10))),
                   d));
    CHECK_FALSE(is_legal(Assumption(AssumptionKind::ConstraintViolation,
                                    Constraint(CmpOp::Gt, var("q"), num(10))),
                         d));
}

TEST_CASE("no assumptions implies classical applicability") {
    Rng rng(kSuiteSeed + 4);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Instance inst = random_instance(kSuiteSeed + 1000 + iter);
        const KnowledgeState& e = inst.problem.init;
        for (const Operator& op : inst.domain.operators) {
            for (const Substitution& sigma : find_substitutions(op.pre, e, Substitution())) {
                if (!generate_assumptions(op.pre, sigma, e).empty()) continue;
                ++checked;
                for (const Precondition& p : op.pre) {
                    Precondition applied = abp::apply(p, sigma);
                    if (const auto* lit = std::get_if<Literal>(&applied))
                        CHECK(e.contains(*lit));
                    else
                        CHECK(eval_constraint(std::get<Constraint>(applied)) ==
                              ConstraintEval::Satisfied);
                }
            }
        }
        (void)rng;
    }
    CHECK(checked > 50);
}

TEST_CASE("find_substitutions agrees with the raw enumeration") {
    for (int iter = 0; iter < 250; ++iter) {
        Instance inst = random_instance(kSuiteSeed + 2000 + iter);
        const KnowledgeState& e = inst.problem.init;
        for (const Operator& op : inst.domain.operators) {
            if (op.pre.size() > 3) continue;
            auto produced = find_substitution_candidates(op.pre, e, Substitution());
            auto raw = raw_choices(op.pre, e, Substitution());

            // soundness: everything produced appears in the raw tree
            for (const auto& cand : produced) {
                bool seen = false;
                for (const auto& r : raw)
                    if (r.substitution == cand.substitution) seen = true;
                CHECK(seen);
            }
            // completeness: every raw choice is produced or dominated by a
            // produced candidate
            for (const auto& r : raw) {
                bool represented = false;
                for (const auto& cand : produced) {
                    if (cand.substitution == r.substitution) {
                        represented = true;
                        break;
                    }
                    RawChoice as_raw{cand.substitution, cand.matched_preconditions,
                                     cand.matched_facts};
                    if (reference_subsumed_by(as_raw, r)) {
                        represented = true;
                        break;
                    }
                }
                CHECK(represented);
            }
            // maximality: no survivor dominates another
            for (const auto& a : produced) {
                for (const auto& b : produced) {
                    if (&a == &b) continue;
                    RawChoice ra{a.substitution, a.matched_preconditions, a.matched_facts};
                    RawChoice rb{b.substitution, b.matched_preconditions, b.matched_facts};
                    if (reference_subsumed_by(ra, rb) && !reference_subsumed_by(rb, ra))
                        CHECK(a.substitution == b.substitution);
                }
            }
            // duplicate-free
            for (std::size_t i = 0; i < produced.size(); ++i)
                for (std::size_t j = i + 1; j < produced.size(); ++j)
                    CHECK(produced[i].substitution != produced[j].substitution);
        }
    }
}

TEST_CASE("matched substitutions never over-instantiate") {
    // the bindings of every candidate come from most general unifiers, so
    // each candidate is an instance-restriction of the raw choice it mirrors
    for (int iter = 0; iter < 100; ++iter) {
        Instance inst = random_instance(kSuiteSeed + 3000 + iter);
        const KnowledgeState& e = inst.problem.init;
        for (const Operator& op : inst.domain.operators) {
            for (const auto& cand : find_substitution_candidates(op.pre, e, Substitution())) {
                for (const auto& [v, t] : cand.substitution.bindings()) {
                    // every binding resolves to a term of the matched facts or
                    // the operator schema; over-instantiation would manifest as
                    // unbound schema variables bound to arbitrary constants.
                    CHECK((t.is_ground() || t.is_variable() || t.is_arith()));
                }
            }
        }
    }
}

TEST_CASE("undetermined constraints dissolve against hypothesis witnesses") {
    // hypothesis hasfuel(cab38, ?q) plus violation (>= ?q 10): the constraint
    // is discharged by the witness q = 10 and the hypothesis becomes ground
    std::vector<Assumption> h{
        Assumption(AssumptionKind::Hypothesis, Literal("hasfuel", {cst("cab38"), var("q")})),
        Assumption(AssumptionKind::ConstraintViolation, Constraint(CmpOp::Ge, var("q"), num(10)))};
    auto [resolved, sigma] = resolve_undetermined_constraints(h, Substitution());
    REQUIRE(resolved.size() == 1);
    CHECK(resolved[0].kind == AssumptionKind::Hypothesis);
    CHECK(std::get<Literal>(resolved[0].content) == Literal("hasfuel", {cst("cab38"), num(10)}));
    CHECK(*sigma.lookup("q") == num(10));

    SUBCASE("witnesses step off strict bounds") {
        std::vector<Assumption> strict{
            Assumption(AssumptionKind::Hypothesis, Literal("hasfuel", {cst("t"), var("q")})),
            Assumption(AssumptionKind::ConstraintViolation,
                       Constraint(CmpOp::Gt, var("q"), num(10)))};
        auto [res, sig] = resolve_undetermined_constraints(strict, Substitution());
        REQUIRE(res.size() == 1);
        CHECK(*sig.lookup("q") == num(11));
    }

    SUBCASE("constraints without hypothesis variables stay assumptions") {
        std::vector<Assumption> lone{Assumption(AssumptionKind::ConstraintViolation,
                                                Constraint(CmpOp::Ge, var("q"), num(10)))};
        auto [res, sig] = resolve_undetermined_constraints(lone, Substitution());
        REQUIRE(res.size() == 1);
        CHECK(res[0].kind == AssumptionKind::ConstraintViolation);
        CHECK(sig.empty());
    }

    SUBCASE("ground violations survive") {
        std::vector<Assumption> ground{
            Assumption(AssumptionKind::Hypothesis, Literal("hasfuel", {cst("t"), var("q")})),
            Assumption(AssumptionKind::ConstraintViolation,
                       Constraint(CmpOp::Ge, num(5), num(10)))};
        auto [res, sig] = resolve_undetermined_constraints(ground, Substitution());
        CHECK(res.size() == 2);
        CHECK(sig.empty());
    }
}

TEST_CASE("assumption sets deduplicate up to renaming") {
    // two unifiable hypotheses count once
    KnowledgeState e;
    std::vector<Precondition> pre{Literal("hasfuel", {cst("t"), var("q1")}),
                                  Literal("hasfuel", {cst("t"), var("q2")})};
    auto assumptions = generate_assumptions(pre, Substitution(), e);
    CHECK(assumptions.size() == 1);
}
