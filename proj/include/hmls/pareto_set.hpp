#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hmls/cost_vector.hpp"

namespace hmls {

// true iff some member of `set` weakly dominates c
template <int Q>
bool pareto_covers(std::span<const CostVector<Q>> set, const CostVector<Q>& c) {
    for (const CostVector<Q>& m : set)
        if (weakly_dominates(m, c)) return true;
    return false;
}

// Payload-free sibling of ParetoSet::insert operating on a plain vector:
// rejects a weakly dominated candidate (first seen wins among equals),
// otherwise evicts the members the candidate weakly dominates and appends it.
template <int Q>
bool pareto_insert(std::vector<CostVector<Q>>& set, const CostVector<Q>& c) {
    if (pareto_covers<Q>(set, c)) return false;
    size_t keep = 0;
    for (size_t i = 0; i < set.size(); ++i) {
        if (!weakly_dominates(c, set[i])) {
            if (keep != i) set[keep] = set[i];
            ++keep;
        }
    }
    set.resize(keep);
    set.push_back(c);
    return true;
}

// Set of mutually non-weakly-dominated cost vectors, each carrying a payload.
// Insertion keeps the invariant: a candidate weakly dominated by any member
// is rejected (so among exactly equal costs the first seen wins), and an
// accepted candidate evicts every member it weakly dominates.
template <int Q, typename Payload = std::monostate>
class ParetoSet {
public:
    struct Entry {
        CostVector<Q> cost;
        Payload payload;
    };

    bool insert(const CostVector<Q>& c, Payload payload = Payload{}) {
        for (const Entry& e : entries_)
            if (weakly_dominates(e.cost, c)) return false;
        size_t keep = 0;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (!weakly_dominates(c, entries_[i].cost)) {
                if (keep != i) entries_[keep] = std::move(entries_[i]);
                ++keep;
            }
        }
        entries_.resize(keep);
        entries_.push_back(Entry{c, std::move(payload)});
        return true;
    }

    // true iff some member weakly dominates c
    bool covers(const CostVector<Q>& c) const {
        for (const Entry& e : entries_)
            if (weakly_dominates(e.cost, c)) return true;
        return false;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    void clear() { entries_.clear(); }

    std::vector<CostVector<Q>> costs() const {
        std::vector<CostVector<Q>> r;
        r.reserve(entries_.size());
        for (const Entry& e : entries_) r.push_back(e.cost);
        return r;
    }

private:
    std::vector<Entry> entries_;
};

} // namespace hmls
