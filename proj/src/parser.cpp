#include "abp/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace abp {

namespace {

bool lookup_cmp(const std::string& token, CmpOp& out) {
    if (token == "<") out = CmpOp::Lt;
    else if (token == "<=") out = CmpOp::Le;
    else if (token == "=") out = CmpOp::Eq;
    else if (token == ">=") out = CmpOp::Ge;
    else if (token == ">") out = CmpOp::Gt;
    else if (token == "!=") out = CmpOp::Ne;
    else return false;
    return true;
}

bool lookup_arith(const std::string& token, ArithOp& out) {
    if (token == "+") out = ArithOp::Add;
    else if (token == "-") out = ArithOp::Sub;
    else if (token == "*") out = ArithOp::Mul;
    else if (token == "/") out = ArithOp::Div;
    else return false;
    return true;
}

std::string require_symbol(const SExpr& node, const char* what) {
    if (!node.is_atom || node.atom.empty() || node.atom[0] == '?' ||
        Rational::parse(node.atom))
        throw node.error(std::string("expected ") + what);
    return node.atom;
}

std::string require_variable(const SExpr& node) {
    if (!node.is_atom || node.atom.size() < 2 || node.atom[0] != '?')
        throw node.error("expected a ?variable");
    return node.atom.substr(1);
}

}  // namespace

Term parse_term(const SExpr& node) {
    if (node.is_atom) {
        if (node.atom.empty()) throw node.error("empty token");
        if (node.atom[0] == '?') {
            if (node.atom.size() < 2) throw node.error("variable needs a name after '?'");
            return Term::variable(node.atom.substr(1));
        }
        if (auto num = Rational::parse(node.atom)) return Term::number(*num);
        return Term::constant(node.atom);
    }
    if (node.size() != 3 || !node[0].is_atom)
        throw node.error("expected (<op> <term> <term>)");
    ArithOp op;
    if (!lookup_arith(node[0].atom, op))
        throw node[0].error("unknown arithmetic operator '" + node[0].atom + "'");
    return Term::arith(op, parse_term(node[1]), parse_term(node[2]));
}

Literal parse_atom(const SExpr& node) {
    if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
        throw node.error("expected an atom (<pred> <term> ...)");
    if (node[0].atom == "not") {
        if (node.size() != 2 || !node[1].is_list())
            throw node.error("expected (not (<pred> <term> ...))");
        Literal inner = parse_atom(node[1]);
        if (!inner.positive) throw node.error("double negation is not allowed");
        return inner.negated();
    }
    Literal l;
    l.predicate = require_symbol(node[0], "a predicate name");
    if (l.predicate[0] == '!' || l.predicate[0] == ':')
        throw node[0].error("'" + l.predicate + "' is not a valid predicate name");
    CmpOp cmp;
    ArithOp arith;
    if (lookup_cmp(l.predicate, cmp) || lookup_arith(l.predicate, arith))
        throw node[0].error("'" + l.predicate + "' is not a valid predicate name");
    for (std::size_t i = 1; i < node.size(); ++i) l.args.push_back(parse_term(node[i]));
    return l;
}

Precondition parse_precondition(const SExpr& node) {
    if (node.is_list() && node.size() == 3 && node[0].is_atom) {
        CmpOp op;
        if (lookup_cmp(node[0].atom, op))
            return Constraint(op, parse_term(node[1]), parse_term(node[2]));
    }
    return parse_atom(node);
}

Task parse_task(const SExpr& node) {
    if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
        throw node.error("expected a task (<name> <term> ...)");
    Task t;
    std::string name = node[0].atom;
    if (name.empty() || name[0] == '?' || name[0] == ':')
        throw node[0].error("expected a task name");
    t.primitive = name[0] == '!';
    t.name = t.primitive ? name.substr(1) : name;
    if (t.name.empty()) throw node[0].error("task name missing after '!'");
    for (std::size_t i = 1; i < node.size(); ++i) t.args.push_back(parse_term(node[i]));
    return t;
}

namespace {

std::vector<Precondition> parse_precondition_list(const SExpr& node) {
    if (!node.is_list()) throw node.error("expected a precondition list");
    std::vector<Precondition> out;
    for (const SExpr& item : node.items) out.push_back(parse_precondition(item));
    return out;
}

std::vector<Literal> parse_atom_list(const SExpr& node, bool allow_negative) {
    if (!node.is_list()) throw node.error("expected an atom list");
    std::vector<Literal> out;
    for (const SExpr& item : node.items) {
        Literal l = parse_atom(item);
        if (!l.positive && !allow_negative)
            throw item.error("negative atoms are not allowed in effect lists");
        out.push_back(l);
    }
    return out;
}

// (!name ?v ...) or (name ?v ...): the head introduces the parameters.
void parse_head(const SExpr& node, bool expect_primitive, std::string& name,
                std::vector<std::string>& params) {
    if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
        throw node.error("expected (<name> ?v ...)");
    std::string surface = node[0].atom;
    bool primitive = !surface.empty() && surface[0] == '!';
    if (primitive != expect_primitive)
        throw node[0].error(expect_primitive ? "operator names carry the '!' prefix"
                                             : "method names must not carry the '!' prefix");
    name = primitive ? surface.substr(1) : surface;
    if (name.empty()) throw node[0].error("missing name");
    for (std::size_t i = 1; i < node.size(); ++i) {
        std::string v = require_variable(node[i]);
        if (std::find(params.begin(), params.end(), v) != params.end())
            throw node[i].error("duplicate parameter ?" + v);
        params.push_back(v);
    }
}

// :key value pairs after the head, in any order, each at most once.
std::map<std::string, const SExpr*> parse_sections(const SExpr& node, std::size_t from,
                                                   const std::set<std::string>& allowed) {
    std::map<std::string, const SExpr*> out;
    std::size_t i = from;
    while (i < node.size()) {
        if (!node[i].is_atom || node[i].atom.empty() || node[i].atom[0] != ':')
            throw node[i].error("expected a :keyword");
        const std::string& key = node[i].atom;
        if (!allowed.count(key)) throw node[i].error("unknown section " + key);
        if (i + 1 >= node.size()) throw node[i].error(key + " needs a value");
        if (out.count(key)) throw node[i].error("duplicate section " + key);
        out.emplace(key, &node[i + 1]);
        i += 2;
    }
    return out;
}

Operator parse_operator(const SExpr& node) {
    Operator op;
    if (node.size() < 2) throw node.error(":operator needs a head");
    parse_head(node[1], true, op.name, op.params);
    auto sections = parse_sections(node, 2, {":pre", ":del", ":add"});
    if (auto it = sections.find(":pre"); it != sections.end())
        op.pre = parse_precondition_list(*it->second);
    if (auto it = sections.find(":del"); it != sections.end())
        op.del = parse_atom_list(*it->second, true);
    if (auto it = sections.find(":add"); it != sections.end())
        op.add = parse_atom_list(*it->second, true);
    return op;
}

Method parse_method(const SExpr& node) {
    Method m;
    if (node.size() < 2) throw node.error(":method needs a head");
    parse_head(node[1], false, m.name, m.params);
    auto sections = parse_sections(node, 2, {":pre", ":act"});
    if (auto it = sections.find(":pre"); it != sections.end())
        m.pre = parse_precondition_list(*it->second);
    if (auto it = sections.find(":act"); it != sections.end()) {
        if (!it->second->is_list()) throw it->second->error("expected a task list");
        for (const SExpr& item : it->second->items) m.act.push_back(parse_task(item));
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Domain parse_domain(const std::string& text) {
    SExpr root = read_sexpr(text);
    if (!root.is_list() || root.size() < 2 || !root[0].is_atom || root[0].atom != "defdomain")
        throw root.error("expected (defdomain <name> ...)");
    Domain d;
    d.name = require_symbol(root[1], "a domain name");
    for (std::size_t i = 2; i < root.size(); ++i) {
        const SExpr& node = root[i];
        if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
            throw node.error("expected (:operator ...), (:method ...) or (:hypothetical ...)");
        const std::string& head = node[0].atom;
        if (head == ":operator") {
            d.operators.push_back(parse_operator(node));
        } else if (head == ":method") {
            d.methods.push_back(parse_method(node));
        } else if (head == ":hypothetical") {
            for (std::size_t j = 1; j < node.size(); ++j) {
                if (!node[j].is_atom) throw node[j].error("expected a predicate name");
                d.hypothetical.insert(node[j].atom);
            }
        } else {
            throw node[0].error("unknown domain section " + head);
        }
    }
    validate_domain(d);
    return d;
}

Problem parse_problem(const std::string& text, const Domain& d) {
    SExpr root = read_sexpr(text);
    if (!root.is_list() || root.size() < 3 || !root[0].is_atom || root[0].atom != "defproblem")
        throw root.error("expected (defproblem <name> <domain-name> ...)");
    Problem p;
    p.name = require_symbol(root[1], "a problem name");
    p.domain_name = require_symbol(root[2], "a domain name");
    for (std::size_t i = 3; i < root.size(); ++i) {
        const SExpr& node = root[i];
        if (!node.is_list() || node.size() == 0 || !node[0].is_atom)
            throw node.error("expected (:init ...) or (:goal ...)");
        const std::string& head = node[0].atom;
        if (head == ":init") {
            if (node.size() != 2 || !node[1].is_list())
                throw node.error(":init takes one atom list");
            p.init = KnowledgeState::from_literals(parse_atom_list(node[1], true));
        } else if (head == ":goal") {
            if (node.size() != 2 || !node[1].is_list())
                throw node.error(":goal takes one task list");
            for (const SExpr& item : node[1].items) p.goals.push_back(parse_task(item));
        } else {
            throw node[0].error("unknown problem section " + head);
        }
    }
    validate_problem(p, d);
    return p;
}

Domain parse_domain_file(const std::string& path) { return parse_domain(read_file(path)); }

Problem parse_problem_file(const std::string& path, const Domain& d) {
    return parse_problem(read_file(path), d);
}

namespace {

void print_precondition_list(std::ostream& os, const std::vector<Precondition>& pre) {
    os << "(";
    for (std::size_t i = 0; i < pre.size(); ++i) os << (i ? " " : "") << to_string(pre[i]);
    os << ")";
}

void print_atom_list(std::ostream& os, const std::vector<Literal>& lits) {
    os << "(";
    for (std::size_t i = 0; i < lits.size(); ++i) os << (i ? " " : "") << lits[i].to_string();
    os << ")";
}

void print_head(std::ostream& os, const std::string& surface,
                const std::vector<std::string>& params) {
    os << "(" << surface;
    for (const std::string& v : params) os << " ?" << v;
    os << ")";
}

}  // namespace

std::string pretty_print(const Domain& d) {
    std::ostringstream os;
    os << "(defdomain " << d.name << "\n";
    for (const Operator& op : d.operators) {
        os << "  (:operator ";
        print_head(os, "!" + op.name, op.params);
        os << "\n    :pre  ";
        print_precondition_list(os, op.pre);
        os << "\n    :del  ";
        print_atom_list(os, op.del);
        os << "\n    :add  ";
        print_atom_list(os, op.add);
        os << ")\n";
    }
    for (const Method& m : d.methods) {
        os << "  (:method ";
        print_head(os, m.name, m.params);
        os << "\n    :pre  ";
        print_precondition_list(os, m.pre);
        os << "\n    :act  (";
        for (std::size_t i = 0; i < m.act.size(); ++i)
            os << (i ? " " : "") << m.act[i].to_string();
        os << "))\n";
    }
    if (!d.hypothetical.empty()) {
        os << "  (:hypothetical";
        for (const std::string& h : d.hypothetical) os << " " << h;
        os << ")\n";
    }
    os << ")\n";
    return os.str();
}

std::string pretty_print(const Problem& p) {
    std::ostringstream os;
    os << "(defproblem " << p.name << " " << p.domain_name << "\n  (:init (";
    const auto& facts = p.init.facts();
    for (std::size_t i = 0; i < facts.size(); ++i) os << (i ? " " : "") << facts[i].to_string();
    os << "))\n  (:goal (";
    for (std::size_t i = 0; i < p.goals.size(); ++i) os << (i ? " " : "") << p.goals[i].to_string();
    os << ")))\n";
    return os.str();
}

}  // namespace abp
