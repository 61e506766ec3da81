#include "abp/domain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abp {

std::string Task::to_string() const {
    std::string s = "(" + surface_name();
    for (const Term& t : args) s += " " + t.to_string();
    return s + ")";
}

int compare(const Task& a, const Task& b) {
    if (a.primitive != b.primitive) return a.primitive ? -1 : 1;
    if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
    return 0;
}

Task apply(const Task& t, const Substitution& s) {
    Task out = t;
    for (Term& a : out.args) a = apply(a, s);
    return out;
}

std::vector<Task> apply(const std::vector<Task>& ts, const Substitution& s) {
    std::vector<Task> out;
    out.reserve(ts.size());
    for (const Task& t : ts) out.push_back(apply(t, s));
    return out;
}

const Operator* Domain::find_operator(const std::string& op_name) const {
    for (const Operator& op : operators)
        if (op.name == op_name) return &op;
    return nullptr;
}

std::vector<const Method*> Domain::find_methods(const std::string& method_name) const {
    std::vector<const Method*> out;
    for (const Method& m : methods)
        if (m.name == method_name) out.push_back(&m);
    return out;
}

bool Domain::has_task_name(const Task& t) const {
    if (t.primitive) return find_operator(t.name) != nullptr;
    return !find_methods(t.name).empty();
}

namespace {

void note_arity(std::map<std::string, std::size_t>& arities, const Literal& l,
                const std::string& where) {
    auto [it, inserted] = arities.emplace(l.predicate, l.args.size());
    if (!inserted && it->second != l.args.size())
        throw std::invalid_argument("arity inconsistency: predicate '" + l.predicate +
                                    "' used with " + std::to_string(l.args.size()) +
                                    " argument(s) in " + where + " but " +
                                    std::to_string(it->second) + " elsewhere");
}

void collect_pre_variables(const std::vector<Precondition>& pre, std::vector<std::string>& out) {
    for (const Precondition& p : pre) collect_variables(p, out);
}

void check_effect_variables(const std::vector<Literal>& effects,
                            const std::vector<std::string>& bound, const std::string& where) {
    for (const Literal& l : effects) {
        std::vector<std::string> vars;
        l.collect_variables(vars);
        for (const std::string& v : vars)
            if (std::find(bound.begin(), bound.end(), v) == bound.end())
                throw std::invalid_argument("free effect variable ?" + v + " in " + where);
    }
}

}  // namespace

void validate_domain(Domain& d) {
    std::map<std::string, std::size_t> arities;
    std::set<std::string> operator_names;
    std::set<std::string> seen_predicates;

    for (const Operator& op : d.operators) {
        if (!operator_names.insert(op.name).second)
            throw std::invalid_argument("duplicate name: operator !" + op.name);
        std::vector<std::string> bound(op.params);
        collect_pre_variables(op.pre, bound);
        check_effect_variables(op.del, bound, "operator !" + op.name);
        check_effect_variables(op.add, bound, "operator !" + op.name);
        for (const Precondition& p : op.pre)
            if (auto* l = std::get_if<Literal>(&p)) {
                note_arity(arities, *l, "operator !" + op.name);
                seen_predicates.insert(l->predicate);
            }
        for (const Literal& l : op.del) {
            note_arity(arities, l, "operator !" + op.name);
            seen_predicates.insert(l.predicate);
        }
        for (const Literal& l : op.add) {
            note_arity(arities, l, "operator !" + op.name);
            seen_predicates.insert(l.predicate);
        }
    }

    std::map<std::string, std::size_t> task_arities;
    for (const Operator& op : d.operators) task_arities.emplace("!" + op.name, op.params.size());

    for (const Method& m : d.methods) {
        if (operator_names.count(m.name))
            throw std::invalid_argument("duplicate name: method " + m.name +
                                        " collides with operator !" + m.name);
        auto [it, inserted] = task_arities.emplace(m.name, m.params.size());
        if (!inserted && it->second != m.params.size())
            throw std::invalid_argument("arity inconsistency: method " + m.name +
                                        " declared with differing parameter counts");
    }

    for (const Method& m : d.methods) {
        std::vector<std::string> bound(m.params);
        collect_pre_variables(m.pre, bound);
        for (const Precondition& p : m.pre)
            if (auto* l = std::get_if<Literal>(&p)) {
                note_arity(arities, *l, "method " + m.name);
                seen_predicates.insert(l->predicate);
            }
        for (const Task& t : m.act) {
            std::vector<std::string> vars;
            for (const Term& a : t.args) a.collect_variables(vars);
            for (const std::string& v : vars)
                if (std::find(bound.begin(), bound.end(), v) == bound.end())
                    throw std::invalid_argument("free effect variable ?" + v + " in method " +
                                                m.name);
            auto it = task_arities.find(t.surface_name());
            if (it == task_arities.end())
                throw std::invalid_argument("unknown task " + t.surface_name() + " in method " +
                                            m.name);
            if (it->second != t.args.size())
                throw std::invalid_argument("arity mismatch: task " + t.surface_name() +
                                            " takes " + std::to_string(it->second) +
                                            " argument(s), method " + m.name + " passes " +
                                            std::to_string(t.args.size()));
        }
    }

    static const std::set<std::string> comparison_tokens{"<", "<=", "=", ">=", ">", "!="};
    for (const std::string& h : d.hypothetical) {
        if (comparison_tokens.count(h)) continue;
        if (!seen_predicates.count(h))
            d.warnings.push_back("hypothetical predicate '" + h +
                                 "' is not mentioned anywhere in the domain");
    }
}

void validate_problem(const Problem& p, const Domain& d) {
    if (p.domain_name != d.name)
        throw std::invalid_argument("problem '" + p.name + "' targets domain '" + p.domain_name +
                                    "', not '" + d.name + "'");
    std::map<std::string, std::size_t> arities;
    for (const Operator& op : d.operators) arities.emplace("!" + op.name, op.params.size());
    for (const Method& m : d.methods) arities.emplace(m.name, m.params.size());

    for (const Task& t : p.goals) {
        auto it = arities.find(t.surface_name());
        if (it == arities.end())
            throw std::invalid_argument("unknown task " + t.surface_name() + " in goal list");
        if (it->second != t.args.size())
            throw std::invalid_argument("arity mismatch: goal task " + t.surface_name() +
                                        " takes " + std::to_string(it->second) + " argument(s)");
    }
}

}  // namespace abp
