#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <set>

#include "abp/conjecture.hpp"

namespace abp {

struct SearchConfig {
    std::optional<int> max_assumptions;  // nullopt: unbounded
    int max_depth = 64;
    bool iterative_deepening = false;
    std::uint64_t node_budget = 1000000;
    bool dominance_pruning = false;  // prune children dominated on (state, tasks, weight)
};

struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labeled transition between two nodes of the conjecture tree.
struct Edge {
    Task action;  // instantiated under `substitution`
    bool compound = false;
    std::vector<Assumption> assumptions;
    Substitution substitution;
};

// Search node <E_i, A_i, w_i>: a reachable state, the remaining tasks, and
// the number of assumptions accumulated from the root.
struct ConjectureNode {
    KnowledgeState state;
    std::vector<Task> remaining;
    int weight = 0;
    int depth = 0;
    int parent = -1;  // index into the tree's node arena; -1 for the root
    std::optional<Edge> in_edge;
    bool expanded = false;
    std::uint64_t seq = 0;  // insertion order, breaks frontier ties FIFO
};

struct SearchStats {
    std::uint64_t expansions = 0;
    std::size_t max_frontier = 0;
    std::size_t tree_size = 0;
    double elapsed_ms = 0.0;
    bool pruned_by_assumption_bound = false;
    bool pruned_by_depth = false;
};

// Best-first reachable-state tree. The frontier is ordered by fewest
// assumptions, then deepest node, then insertion order; the deeper-first
// tie-break makes bound-0 search reproduce plain depth-first decomposition.
class ConjectureTree {
public:
    ConjectureTree(KnowledgeState init, std::vector<Task> goals, const Domain& d,
                   SearchConfig cfg);

    // Removes and returns the best open node, or -1 when the frontier is
    // exhausted.
    int select_best();

    // Expands an unexpanded node with a non-empty task list: one child per
    // applicable (operator-or-method, substitution) pair whose assumptions
    // are all legal and fit the assumption bound. Returns the indices of the
    // admitted children.
    std::vector<int> expand(int node_index);

    const ConjectureNode& node(int i) const { return nodes_[i]; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t frontier_size() const { return frontier_.size(); }
    const Domain& domain() const { return *domain_; }
    const SearchConfig& config() const { return config_; }

    bool pruned_by_assumption_bound() const { return pruned_by_assumption_bound_; }
    bool pruned_by_depth() const { return pruned_by_depth_; }

    // Walks leaf to root and assembles the conjecture in execution order.
    // Assumptions on a decomposition edge are carried by the first primitive
    // step at or after it; a trailing decomposition with no later primitive
    // step contributes to final_assumptions instead.
    Conjecture extract(int leaf_index) const;

private:
    struct FrontierKey {
        int weight;
        int depth;
        std::uint64_t seq;
        int node;
        bool operator>(const FrontierKey& o) const {
            if (weight != o.weight) return weight > o.weight;
            if (depth != o.depth) return depth < o.depth;  // deeper first
            return seq > o.seq;
        }
    };

    const KnowledgeState& intern(KnowledgeState s);
    void expand_with_operator(int ni, const Operator& op, const Task& alpha,
                              const std::vector<Task>& rest, std::vector<int>& out);
    void expand_with_method(int ni, const Method& m, const Task& alpha,
                            const std::vector<Task>& rest, std::vector<int>& out);
    void admit_child(int parent, Edge edge, KnowledgeState state, std::vector<Task> remaining,
                     std::vector<int>& out);

    const Domain* domain_;
    SearchConfig config_;
    std::vector<ConjectureNode> nodes_;
    std::priority_queue<FrontierKey, std::vector<FrontierKey>, std::greater<FrontierKey>>
        frontier_;
    std::set<KnowledgeState> state_pool_;  // hash-consed state storage
    std::map<std::string, int> dominance_;
    std::uint64_t next_seq_ = 0;
    std::uint64_t rename_counter_ = 0;
    bool pruned_by_assumption_bound_ = false;
    bool pruned_by_depth_ = false;
};

Conjecture extract_conjecture(const ConjectureTree& tree, int leaf_index);

enum class SearchStatus { Solved, NoSolutionWithinBounds, BudgetExhausted };

const char* to_string(SearchStatus s);

struct SearchOutcome {
    std::optional<Conjecture> conjecture;
    SearchStatus status = SearchStatus::NoSolutionWithinBounds;
    SearchStats stats;
};

// Repeated select-and-expand until a selected node has no remaining tasks.
// With iterative deepening the search restarts with max_depth 1, 2, ... up to
// the configured bound, sharing one node budget. The returned conjecture has
// minimal total weight among all conjectures within the depth bound.
SearchOutcome find_conjecture(const KnowledgeState& init, const Domain& d,
                              const std::vector<Task>& goals, const SearchConfig& cfg);

}  // namespace abp
