#pragma once

#include <memory>
#include <vector>

#include "abp/substitution.hpp"

namespace abp {

// Partial description of the world: a consistent set of ground or partially
// ground literals kept in sorted order. States are immutable values; updates
// return new states that share the unchanged storage.
class KnowledgeState {
public:
    KnowledgeState() : facts_(empty_rep()) {}

    // Inserts in order; a later literal replaces its own negation, so an input
    // listing (p) then (not (p)) ends with the negation.
    static KnowledgeState from_literals(const std::vector<Literal>& literals);

    const std::vector<Literal>& facts() const { return *facts_; }
    std::size_t size() const { return facts_->size(); }
    bool empty() const { return facts_->empty(); }

    bool contains(const Literal& l) const;

    // Adds one fact, folding its arguments and withdrawing its negation if
    // present. Duplicate insertion is a no-op.
    KnowledgeState insert(const Literal& l) const;

    // Removes a syntactically equal fact; absent facts are a no-op.
    KnowledgeState erase(const Literal& l) const;

    bool operator==(const KnowledgeState& o) const {
        return facts_ == o.facts_ || *facts_ == *o.facts_;
    }
    bool operator!=(const KnowledgeState& o) const { return !(*this == o); }
    bool operator<(const KnowledgeState& o) const { return *facts_ < *o.facts_; }

    std::string to_string() const;

private:
    static std::shared_ptr<const std::vector<Literal>> empty_rep();
    explicit KnowledgeState(std::shared_ptr<const std::vector<Literal>> facts)
        : facts_(std::move(facts)) {}

    std::shared_ptr<const std::vector<Literal>> facts_;
};

// E' = (E minus the negations of H) union H. H must be internally consistent.
KnowledgeState consistent_union(const KnowledgeState& e, const std::vector<Literal>& h);

}  // namespace abp
