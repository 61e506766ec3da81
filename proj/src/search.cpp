#include "abp/search.hpp"

#include <algorithm>
#include <chrono>

namespace abp {

/*
 * Expansion of one node:
 *
 *   1. take the first remaining task and every operator or method carrying
 *      its name, with the schema's variables renamed apart;
 *   2. seed a substitution binding the schema parameters to the task
 *      arguments and enumerate the unify-or-skip substitutions. The
 *      enumeration is deliberately unfiltered: a substitution that looks
 *      dominated can still carry the cheapest legal assumption set, so
 *      maximality filtering here could lose minimal conjectures;
 *   3. per substitution, derive the assumption set, discharge undetermined
 *      constraints whose variables stem from hypotheses, and drop the branch
 *      if an assumption is illegal, the step is incoherent once assumptions
 *      are folded in, or the weight bound is exceeded;
 *   4. primitive actions apply their effects to the assumption-augmented
 *      state, compound actions splice their body in front of the remaining
 *      tasks. The edge substitution is applied to the spliced body and to the
 *      remaining tasks so variables shared across tasks stay consistent.
 */

namespace {

std::string fresh_suffix(std::uint64_t k) { return "~" + std::to_string(k); }

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

}  // namespace

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Solved: return "solved";
        case SearchStatus::NoSolutionWithinBounds: return "no-solution-within-bounds";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

ConjectureTree::ConjectureTree(KnowledgeState init, std::vector<Task> goals, const Domain& d,
                               SearchConfig cfg)
    : domain_(&d), config_(cfg) {
    ConjectureNode root;
    root.state = intern(std::move(init));
    root.remaining = std::move(goals);
    root.seq = next_seq_++;
    nodes_.push_back(std::move(root));
    frontier_.push(FrontierKey{0, 0, nodes_[0].seq, 0});
}

const KnowledgeState& ConjectureTree::intern(KnowledgeState s) {
    return *state_pool_.insert(std::move(s)).first;
}

int ConjectureTree::select_best() {
    if (frontier_.empty()) return -1;
    FrontierKey best = frontier_.top();
    frontier_.pop();
    return best.node;
}

std::vector<int> ConjectureTree::expand(int node_index) {
    ConjectureNode& n = nodes_[node_index];
    if (n.expanded) throw SearchError("node expanded twice");
    if (n.remaining.empty()) throw SearchError("cannot expand a solution node");
    n.expanded = true;

    Task alpha = n.remaining.front();
    std::vector<Task> rest(n.remaining.begin() + 1, n.remaining.end());

    std::vector<int> children;
    if (alpha.primitive) {
        const Operator* op = domain_->find_operator(alpha.name);
        if (!op) throw SearchError("unknown task " + alpha.surface_name());
        expand_with_operator(node_index, *op, alpha, rest, children);
    } else {
        auto methods = domain_->find_methods(alpha.name);
        if (methods.empty()) throw SearchError("unknown task " + alpha.surface_name());
        for (const Method* m : methods) expand_with_method(node_index, *m, alpha, rest, children);
    }
    return children;
}

void ConjectureTree::expand_with_operator(int ni, const Operator& op, const Task& alpha,
                                          const std::vector<Task>& rest, std::vector<int>& out) {
    if (op.params.size() != alpha.args.size())
        throw SearchError("arity mismatch for task " + alpha.surface_name());
    const std::string suffix = fresh_suffix(rename_counter_++);

    std::vector<Precondition> pre;
    for (const Precondition& p : op.pre) pre.push_back(rename_precondition(p, suffix));
    Substitution seed = bind_params(op.params, alpha.args, suffix);

    const KnowledgeState state = nodes_[ni].state;
    for (SubstitutionCandidate& cand : enumerate_substitution_candidates(pre, state, seed)) {
        Substitution& sigma = cand.substitution;
        auto [assumptions, theta] =
            resolve_undetermined_constraints(generate_assumptions(pre, sigma, state), sigma);
        bool legal = std::all_of(assumptions.begin(), assumptions.end(),
                                 [&](const Assumption& a) { return is_legal(a, *domain_); });
        if (!legal) continue;

        KnowledgeState next = consistent_union(state, assumed_literals(assumptions));
        if (!assumptions_support(pre, theta, next, assumptions)) continue;
        for (const Literal& l : op.del) next = next.erase(apply(rename_literal(l, suffix), theta));
        for (const Literal& l : op.add) next = next.insert(apply(rename_literal(l, suffix), theta));

        Edge edge;
        edge.action = Task(true, op.name, abp::apply(alpha.args, theta));
        edge.compound = false;
        edge.assumptions = std::move(assumptions);
        edge.substitution = theta;
        admit_child(ni, std::move(edge), std::move(next), abp::apply(rest, theta), out);
    }
}

void ConjectureTree::expand_with_method(int ni, const Method& m, const Task& alpha,
                                        const std::vector<Task>& rest, std::vector<int>& out) {
    if (m.params.size() != alpha.args.size())
        throw SearchError("arity mismatch for task " + alpha.surface_name());
    const std::string suffix = fresh_suffix(rename_counter_++);

    std::vector<Precondition> pre;
    for (const Precondition& p : m.pre) pre.push_back(rename_precondition(p, suffix));
    Substitution seed = bind_params(m.params, alpha.args, suffix);

    const KnowledgeState state = nodes_[ni].state;
    for (SubstitutionCandidate& cand : enumerate_substitution_candidates(pre, state, seed)) {
        Substitution& sigma = cand.substitution;
        auto [assumptions, theta] =
            resolve_undetermined_constraints(generate_assumptions(pre, sigma, state), sigma);
        bool legal = std::all_of(assumptions.begin(), assumptions.end(),
                                 [&](const Assumption& a) { return is_legal(a, *domain_); });
        if (!legal) continue;

        KnowledgeState next = consistent_union(state, assumed_literals(assumptions));
        if (!assumptions_support(pre, theta, next, assumptions)) continue;

        std::vector<Task> remaining;
        remaining.reserve(m.act.size() + rest.size());
        for (const Task& t : m.act) remaining.push_back(apply(rename_task(t, suffix), theta));
        for (const Task& t : rest) remaining.push_back(apply(t, theta));

        Edge edge;
        edge.action = Task(false, m.name, abp::apply(alpha.args, theta));
        edge.compound = true;
        edge.assumptions = std::move(assumptions);
        edge.substitution = theta;
        admit_child(ni, std::move(edge), std::move(next), std::move(remaining), out);
    }
}

void ConjectureTree::admit_child(int parent, Edge edge, KnowledgeState state,
                                 std::vector<Task> remaining, std::vector<int>& out) {
    int weight = nodes_[parent].weight + static_cast<int>(edge.assumptions.size());
    if (config_.max_assumptions && weight > *config_.max_assumptions) {
        pruned_by_assumption_bound_ = true;
        return;
    }
    int depth = nodes_[parent].depth + 1;
    if (depth > config_.max_depth) {
        pruned_by_depth_ = true;
        return;
    }
    if (config_.dominance_pruning) {
        std::string key = state.to_string();
        key += "|";
        for (const Task& t : remaining) key += t.to_string();
        auto [it, inserted] = dominance_.emplace(key, weight);
        if (!inserted) {
            if (it->second <= weight) return;
            it->second = weight;
        }
    }

    ConjectureNode child;
    child.state = intern(std::move(state));
    child.remaining = std::move(remaining);
    child.weight = weight;
    child.depth = depth;
    child.parent = parent;
    child.in_edge = std::move(edge);
    child.seq = next_seq_++;
    nodes_.push_back(std::move(child));
    int index = static_cast<int>(nodes_.size()) - 1;
    frontier_.push(FrontierKey{weight, depth, nodes_[index].seq, index});
    out.push_back(index);
}

Conjecture ConjectureTree::extract(int leaf_index) const {
    const ConjectureNode& leaf = nodes_[leaf_index];
    if (!leaf.remaining.empty()) throw SearchError("extracting from a non-solution node");

    std::vector<const Edge*> chain;
    for (int i = leaf_index; nodes_[i].parent >= 0; i = nodes_[i].parent)
        chain.push_back(&*nodes_[i].in_edge);
    std::reverse(chain.begin(), chain.end());

    Conjecture out;
    std::vector<Assumption> pending;
    for (const Edge* e : chain) {
        if (e->compound) {
            pending.insert(pending.end(), e->assumptions.begin(), e->assumptions.end());
            continue;
        }
        ConjectureStep step;
        step.assumptions = std::move(pending);
        pending.clear();
        step.assumptions.insert(step.assumptions.end(), e->assumptions.begin(),
                                e->assumptions.end());
        step.action = e->action;
        out.steps.push_back(std::move(step));
    }
    out.final_assumptions = std::move(pending);
    out.total_weight = leaf.weight;
    return out;
}

Conjecture extract_conjecture(const ConjectureTree& tree, int leaf_index) {
    return tree.extract(leaf_index);
}

namespace {

// stats accumulate across iterative-deepening restarts; the node budget is
// shared by all of them.
SearchOutcome search_once(const KnowledgeState& init, const Domain& d,
                          const std::vector<Task>& goals, const SearchConfig& cfg,
                          SearchStats& stats) {
    ConjectureTree tree(init, goals, d, cfg);
    SearchOutcome outcome;
    for (;;) {
        stats.max_frontier = std::max(stats.max_frontier, tree.frontier_size());
        int ni = tree.select_best();
        if (ni < 0) {
            outcome.status = SearchStatus::NoSolutionWithinBounds;
            break;
        }
        if (tree.node(ni).remaining.empty()) {
            outcome.conjecture = tree.extract(ni);
            outcome.status = SearchStatus::Solved;
            break;
        }
        if (stats.expansions >= cfg.node_budget) {
            outcome.status = SearchStatus::BudgetExhausted;
            break;
        }
        tree.expand(ni);
        ++stats.expansions;
    }
    stats.tree_size += tree.size();
    if (tree.pruned_by_assumption_bound()) stats.pruned_by_assumption_bound = true;
    if (tree.pruned_by_depth()) stats.pruned_by_depth = true;
    outcome.stats = stats;
    return outcome;
}

}  // namespace

SearchOutcome find_conjecture(const KnowledgeState& init, const Domain& d,
                              const std::vector<Task>& goals, const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    SearchOutcome outcome;
    if (!cfg.iterative_deepening) {
        outcome = search_once(init, d, goals, cfg, stats);
    } else {
        for (int depth = 1; depth <= cfg.max_depth; ++depth) {
            SearchConfig iter = cfg;
            iter.max_depth = depth;
            iter.iterative_deepening = false;
            stats.pruned_by_depth = false;
            outcome = search_once(init, d, goals, iter, stats);
            if (outcome.status == SearchStatus::Solved ||
                outcome.status == SearchStatus::BudgetExhausted)
                break;
            // Nothing was cut off by this depth bound, so deeper bounds
            // cannot reach new nodes either: the absence is proven.
            if (!stats.pruned_by_depth) break;
        }
    }
    auto end = std::chrono::steady_clock::now();
    outcome.stats = stats;
    outcome.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - start)
            .count();
    return outcome;
}

}  // namespace abp
