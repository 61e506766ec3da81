#include "abp/state.hpp"

#include <algorithm>

namespace abp {

std::shared_ptr<const std::vector<Literal>> KnowledgeState::empty_rep() {
    static const auto empty = std::make_shared<const std::vector<Literal>>();
    return empty;
}

KnowledgeState KnowledgeState::from_literals(const std::vector<Literal>& literals) {
    KnowledgeState s;
    for (const Literal& l : literals) s = s.insert(l);
    return s;
}

bool KnowledgeState::contains(const Literal& l) const {
    return std::binary_search(facts_->begin(), facts_->end(), l);
}

KnowledgeState KnowledgeState::insert(const Literal& raw) const {
    Literal l = raw;
    for (Term& t : l.args) t = fold(t);
    if (contains(l)) return *this;

    auto next = std::make_shared<std::vector<Literal>>(*facts_);
    Literal neg = l.negated();
    auto it = std::lower_bound(next->begin(), next->end(), neg);
    if (it != next->end() && *it == neg) next->erase(it);
    next->insert(std::lower_bound(next->begin(), next->end(), l), l);
    return KnowledgeState(std::move(next));
}

KnowledgeState KnowledgeState::erase(const Literal& l) const {
    auto it = std::lower_bound(facts_->begin(), facts_->end(), l);
    if (it == facts_->end() || *it != l) return *this;
    auto next = std::make_shared<std::vector<Literal>>(*facts_);
    next->erase(next->begin() + (it - facts_->begin()));
    return KnowledgeState(std::move(next));
}

std::string KnowledgeState::to_string() const {
    std::string s = "(";
    bool first = true;
    for (const Literal& l : *facts_) {
        if (!first) s += " ";
        first = false;
        s += l.to_string();
    }
    return s + ")";
}

KnowledgeState consistent_union(const KnowledgeState& e, const std::vector<Literal>& h) {
    KnowledgeState out = e;
    for (const Literal& l : h) out = out.insert(l);
    return out;
}

}  // namespace abp
