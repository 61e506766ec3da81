#include "abp/conjecture.hpp"

#include <sstream>

#include <json.hpp>

#include "abp/parser.hpp"

namespace abp {

using ordered_json = nlohmann::ordered_json;

std::vector<Task> Conjecture::actions() const {
    std::vector<Task> out;
    out.reserve(steps.size());
    for (const ConjectureStep& s : steps) out.push_back(s.action);
    return out;
}

Conjecture canonicalize(const Conjecture& c) {
    // A single renaming shared across the whole conjecture keeps identical
    // variables identical between steps.
    std::map<std::string, std::string> names;
    std::size_t next = 0;
    auto rename_term = [&](const Term& t, auto&& self) -> Term {
        switch (t.kind()) {
            case Term::Kind::Variable: {
                auto [it, inserted] = names.emplace(t.name(), "v" + std::to_string(next));
                if (inserted) ++next;
                return Term::variable(it->second);
            }
            case Term::Kind::Constant:
            case Term::Kind::Number:
                return t;
            case Term::Kind::Arith:
                return Term::arith(t.op(), self(t.lhs(), self), self(t.rhs(), self));
        }
        return t;
    };
    auto rename = [&](const Term& t) { return rename_term(t, rename_term); };

    Conjecture out = c;
    auto rename_assumption = [&](Assumption& a) {
        if (auto* lit = std::get_if<Literal>(&a.content)) {
            for (Term& t : lit->args) t = rename(t);
        } else {
            auto& cons = std::get<Constraint>(a.content);
            cons.lhs = rename(cons.lhs);
            cons.rhs = rename(cons.rhs);
        }
    };
    for (ConjectureStep& s : out.steps) {
        for (Assumption& a : s.assumptions) rename_assumption(a);
        for (Term& t : s.action.args) t = rename(t);
    }
    for (Assumption& a : out.final_assumptions) rename_assumption(a);
    return out;
}

std::string to_sexpr(const Conjecture& c) {
    std::ostringstream os;
    os << "(:conjecture :weight " << c.total_weight;
    for (const ConjectureStep& s : c.steps) {
        os << "\n  (:step (:assume (";
        for (std::size_t i = 0; i < s.assumptions.size(); ++i)
            os << (i ? " " : "") << s.assumptions[i].to_string();
        os << ")) (:action " << s.action.to_string() << "))";
    }
    if (!c.final_assumptions.empty()) {
        os << "\n  (:assume-final (";
        for (std::size_t i = 0; i < c.final_assumptions.size(); ++i)
            os << (i ? " " : "") << c.final_assumptions[i].to_string();
        os << "))";
    }
    os << ")\n";
    return os.str();
}

namespace {

std::vector<Assumption> parse_assume_list(const SExpr& node) {
    // Assumption kinds are recoverable from content and replay state, so the
    // file format stores plain atoms and constraints.
    if (!node.is_list()) throw node.error("expected an assumption list");
    std::vector<Assumption> out;
    for (const SExpr& item : node.items) {
        Precondition p = parse_precondition(item);
        AssumptionKind kind = std::holds_alternative<Constraint>(p)
                                  ? AssumptionKind::ConstraintViolation
                                  : AssumptionKind::Hypothesis;
        out.push_back(Assumption(kind, std::move(p)));
    }
    return out;
}

Conjecture from_sexpr_node(const SExpr& root) {
    if (!root.is_list() || root.size() < 3 || !root[0].is_atom ||
        root[0].atom != ":conjecture" || !root[1].is_atom || root[1].atom != ":weight" ||
        !root[2].is_atom)
        throw root.error("expected (:conjecture :weight W ...)");
    Conjecture c;
    auto weight = Rational::parse(root[2].atom);
    if (!weight || !weight->is_integer() || weight->num() < 0)
        throw root[2].error("weight must be a non-negative integer");
    c.total_weight = static_cast<int>(weight->num());
    for (std::size_t i = 3; i < root.size(); ++i) {
        const SExpr& node = root[i];
        if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
            throw node.error("expected (:step ...) or (:assume-final ...)");
        if (node[0].atom == ":assume-final") {
            if (node.size() != 2) throw node.error(":assume-final takes one list");
            c.final_assumptions = parse_assume_list(node[1]);
            continue;
        }
        if (node[0].atom != ":step") throw node[0].error("expected :step");
        if (node.size() != 3 || !node[1].is_list() || node[1].size() != 2 ||
            !node[1][0].is_atom || node[1][0].atom != ":assume" || !node[2].is_list() ||
            node[2].size() != 2 || !node[2][0].is_atom || node[2][0].atom != ":action")
            throw node.error("expected (:step (:assume (...)) (:action (...)))");
        ConjectureStep step;
        step.assumptions = parse_assume_list(node[1][1]);
        step.action = parse_task(node[2][1]);
        if (!step.action.primitive) throw node[2].error("conjecture actions must be primitive");
        c.steps.push_back(std::move(step));
    }
    return c;
}

}  // namespace

Conjecture parse_conjecture(const std::string& text) {
    return from_sexpr_node(read_sexpr(text));
}

Conjecture parse_conjecture_node(const SExpr& root) { return from_sexpr_node(root); }

std::string to_json(const Conjecture& c) {
    ordered_json doc;
    doc["weight"] = c.total_weight;
    doc["steps"] = ordered_json::array();
    for (const ConjectureStep& s : c.steps) {
        ordered_json step;
        step["assume"] = ordered_json::array();
        for (const Assumption& a : s.assumptions) step["assume"].push_back(a.to_string());
        step["action"] = s.action.to_string();
        doc["steps"].push_back(std::move(step));
    }
    if (!c.final_assumptions.empty()) {
        doc["assume_final"] = ordered_json::array();
        for (const Assumption& a : c.final_assumptions)
            doc["assume_final"].push_back(a.to_string());
    }
    return doc.dump();
}

Conjecture conjecture_from_json(const std::string& text) {
    ordered_json doc = ordered_json::parse(text);
    Conjecture c;
    c.total_weight = doc.at("weight").get<int>();
    auto parse_assumptions = [](const ordered_json& arr) {
        std::vector<Assumption> out;
        for (const auto& item : arr) {
            Precondition p = parse_precondition(read_sexpr(item.get<std::string>()));
            AssumptionKind kind = std::holds_alternative<Constraint>(p)
                                      ? AssumptionKind::ConstraintViolation
                                      : AssumptionKind::Hypothesis;
            out.push_back(Assumption(kind, std::move(p)));
        }
        return out;
    };
    for (const auto& step_doc : doc.at("steps")) {
        ConjectureStep step;
        step.assumptions = parse_assumptions(step_doc.at("assume"));
        step.action = parse_task(read_sexpr(step_doc.at("action").get<std::string>()));
        c.steps.push_back(std::move(step));
    }
    if (doc.contains("assume_final"))
        c.final_assumptions = parse_assumptions(doc.at("assume_final"));
    return c;
}

}  // namespace abp
