#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hmls/cover.hpp"

namespace hmls {

// Per-query distance limits produced by single-criterion searches over the
// hierarchy. lower[v][i] is the criterion-i optimum from v to the
// destination; it is exact for vertices on the (truncated) top level — the
// only ones the upward expansion discipline is guaranteed to serve — so
// entries are kept for those plus the origin, and has_entry doubles as the
// reachable flag. source_upper holds the full cost vector of one real
// origin→destination path per criterion that admits one.
template <int Q>
struct BoundsTable {
    bool active = false;
    std::vector<uint8_t> has_entry;
    std::vector<CostVector<Q>> lower;
    std::vector<CostVector<Q>> source_upper;

    void deactivate(Vertex n) {
        active = false;
        has_entry.assign(n, 0);
        source_upper.clear();
    }
};

// Estimate-based discard: candidate's optimistic completion (its cost plus
// the per-criterion lower bound at its vertex) is compared against the known
// full paths. Strict dominance, not weak: a criterion-optimal path's own
// estimate equals a source_upper vector and must survive.
template <int Q>
inline bool bound_prune(const CostVector<Q>& cost, Vertex v, const BoundsTable<Q>& b) {
    if (!b.active || !b.has_entry[v]) return false;
    const CostVector<Q> estimate = add_cost(cost, b.lower[v]);
    for (const CostVector<Q>& upper : b.source_upper)
        if (dominates(upper, estimate)) return true;
    return false;
}

namespace detail {

// Lazy-deletion scalar Dijkstra over one criterion of the hierarchy,
// expanding each vertex on its (truncated) top level. Tracks the full cost
// vector of the first optimal path found per vertex; ties keep the earlier
// push, so results are deterministic.
template <int Q>
class ScalarDijkstra {
public:
    static constexpr Cost kInf = std::numeric_limits<Cost>::max();

    void run(const HierarchicalCover<Q>& h, Vertex root, int criterion, int cap, bool reverse) {
        const Vertex n = h.base().vertex_count();
        dist.assign(n, kInf);
        vec.assign(n, CostVector<Q>{});
        settled.assign(n, 0);
        heap_.clear();
        seq_ = 0;

        dist[root] = 0;
        push(0, root);
        while (!heap_.empty()) {
            Entry top = pop();
            const Vertex v = top.v;
            if (settled[v]) continue;
            settled[v] = 1;
            const int t = h.effective_top(v, cap);
            auto edges = reverse ? h.in_edges_at(t, v) : h.out_edges_at(t, v);
            for (EdgeId e : edges) {
                const Vertex u = reverse ? h.edge_from(t, e) : h.edge_to(t, e);
                if (settled[u]) continue;
                const CostVector<Q>& ec = h.edge_cost(t, e);
                Cost nd;
                if (__builtin_add_overflow(dist[v], ec[criterion], &nd)) continue;
                if (nd < dist[u]) {
                    dist[u] = nd;
                    vec[u] = add_cost(vec[v], ec);
                    push(nd, u);
                }
            }
        }
    }

    std::vector<Cost> dist;
    std::vector<CostVector<Q>> vec;
    std::vector<uint8_t> settled;

private:
    struct Entry {
        Cost key;
        uint32_t seq;
        Vertex v;
    };

    void push(Cost key, Vertex v) {
        heap_.push_back({key, seq_++, v});
        std::push_heap(heap_.begin(), heap_.end(), later);
    }
    Entry pop() {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        Entry e = heap_.back();
        heap_.pop_back();
        return e;
    }
    static bool later(const Entry& a, const Entry& b) {
        return a.key != b.key ? a.key > b.key : a.seq > b.seq;
    }

    std::vector<Entry> heap_;
    uint32_t seq_ = 0;
};

} // namespace detail

// Limit precomputation for a query (s, d) over the hierarchy truncated to
// level_cap: per criterion, a reverse scalar search from d and a forward one
// from s. The reverse distances fill `lower` for top-level vertices (and s);
// combining the two searches at top-level vertices — d always included as an
// implicit meeting point — yields one real s→d path vector per criterion in
// source_upper. An unreachable d leaves the table inactive and pruning off.
template <int Q>
void compute_bounds(const HierarchicalCover<Q>& h, Vertex s, Vertex d, int level_cap,
                    BoundsTable<Q>& out) {
    const Vertex n = h.base().vertex_count();
    const int cap = effective_cap(h, level_cap);
    out.deactivate(n);
    out.lower.assign(n, CostVector<Q>{});

    detail::ScalarDijkstra<Q> rev, fwd;
    std::vector<Vertex> retained;   // top-level ∪ {s}, reverse-settled
    std::vector<Vertex> tops;       // retained minus the s exception
    for (int i = 0; i < Q; ++i) {
        rev.run(h, d, i, cap, /*reverse=*/true);
        if (i == 0) {
            for (Vertex v = 0; v < n; ++v) {
                if (!rev.settled[v]) continue;
                if (h.effective_top(v, cap) == cap) {
                    retained.push_back(v);
                    tops.push_back(v);
                } else if (v == s) {
                    retained.push_back(v);
                }
            }
            for (Vertex v : retained) out.has_entry[v] = 1;
        }
        for (Vertex v : retained) out.lower[v][i] = rev.dist[v];

        fwd.run(h, s, i, cap, /*reverse=*/false);
        Cost best = detail::ScalarDijkstra<Q>::kInf;
        CostVector<Q> best_vec;
        for (Vertex v : tops) {
            if (!fwd.settled[v]) continue;
            Cost sum;
            if (__builtin_add_overflow(fwd.dist[v], rev.dist[v], &sum)) continue;
            if (sum < best) {
                best = sum;
                best_vec = add_cost(fwd.vec[v], rev.vec[v]);
            }
        }
        if (fwd.settled[d] && fwd.dist[d] < best) {
            best = fwd.dist[d];
            best_vec = fwd.vec[d];
        }
        if (best != detail::ScalarDijkstra<Q>::kInf &&
            std::find(out.source_upper.begin(), out.source_upper.end(), best_vec) ==
                out.source_upper.end())
            out.source_upper.push_back(best_vec);
    }
    out.active = !out.source_upper.empty();
}

template <int Q>
BoundsTable<Q> compute_bounds(const HierarchicalCover<Q>& h, Vertex s, Vertex d,
                              int level_cap = -1) {
    BoundsTable<Q> t;
    compute_bounds(h, s, d, level_cap, t);
    return t;
}

} // namespace hmls
