#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hmls {

using Cost = int64_t;

// Tuple of Q non-negative integer criterion values. All criteria are
// minimized internally; inputs that maximize a criterion must be sign-flipped
// and offset at ingestion. Fixed-point integers keep Pareto-set comparisons
// exact.
template <int Q>
struct CostVector {
    static_assert(Q >= 1, "criterion count must be at least 1");
    std::array<Cost, Q> v{};

    static constexpr int arity = Q;

    static CostVector zero() { return CostVector{}; }

    Cost& operator[](int i) { return v[static_cast<size_t>(i)]; }
    Cost operator[](int i) const { return v[static_cast<size_t>(i)]; }

    bool operator==(const CostVector&) const = default;
};

// Eq. of weak dominance: a is no worse than b in every criterion.
template <int Q>
inline bool weakly_dominates(const CostVector<Q>& a, const CostVector<Q>& b) {
    for (int i = 0; i < Q; ++i)
        if (a.v[i] > b.v[i]) return false;
    return true;
}

// Strict dominance: weakly dominates and differs somewhere.
template <int Q>
inline bool dominates(const CostVector<Q>& a, const CostVector<Q>& b) {
    bool strict = false;
    for (int i = 0; i < Q; ++i) {
        if (a.v[i] > b.v[i]) return false;
        if (a.v[i] < b.v[i]) strict = true;
    }
    return strict;
}

// Reflexive lexicographic order: at the first differing index the smaller
// value wins; equal vectors relate both ways.
template <int Q>
inline bool lex_precedes(const CostVector<Q>& a, const CostVector<Q>& b) {
    for (int i = 0; i < Q; ++i) {
        if (a.v[i] < b.v[i]) return true;
        if (a.v[i] > b.v[i]) return false;
    }
    return true;
}

// three-way: <0, 0, >0 like memcmp; the priority queue uses this plus an
// insertion-sequence tiebreak so exact ties stay deterministic per run
template <int Q>
inline int lex_compare(const CostVector<Q>& a, const CostVector<Q>& b) {
    for (int i = 0; i < Q; ++i) {
        if (a.v[i] < b.v[i]) return -1;
        if (a.v[i] > b.v[i]) return 1;
    }
    return 0;
}

// Componentwise sum. Overflow is a hard error: silent wraparound would
// corrupt Pareto sets, so the query must abort instead.
template <int Q>
inline CostVector<Q> add_cost(const CostVector<Q>& a, const CostVector<Q>& b) {
    CostVector<Q> r;
    for (int i = 0; i < Q; ++i) {
        if (__builtin_add_overflow(a.v[i], b.v[i], &r.v[i]))
            throw std::overflow_error("cost accumulation overflowed");
    }
    return r;
}

// Drops the first component (the dimensionality-reduction projection used by
// t-discarding; requires Q >= 2, enforced at graph load).
template <int Q>
inline CostVector<Q - 1> truncate(const CostVector<Q>& c) {
    static_assert(Q >= 2, "truncation needs at least two criteria");
    CostVector<Q - 1> r;
    for (int i = 1; i < Q; ++i) r.v[i - 1] = c.v[i];
    return r;
}

template <int Q>
inline std::string to_string(const CostVector<Q>& c) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < Q; ++i) {
        if (i) os << ',';
        os << c.v[i];
    }
    os << ')';
    return os.str();
}

template <int Q>
inline std::ostream& operator<<(std::ostream& os, const CostVector<Q>& c) {
    return os << to_string(c);
}

} // namespace hmls
