#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hmls/graph.hpp"
#include "hmls/pareto_set.hpp"

namespace hmls {

// Where a cover edge came from, as indices into the edge array one level
// below (level 1 refers to base edge ids). below_out == kNoIndex marks an
// edge copied verbatim; otherwise the edge is the composition of an incoming
// and an outgoing edge of a skipped vertex.
struct Provenance {
    uint32_t below_in = kNoIndex;
    uint32_t below_out = kNoIndex;

    bool composed() const { return below_out != kNoIndex; }
    static Provenance copied(uint32_t idx) { return {idx, kNoIndex}; }
    static Provenance pair(uint32_t in_idx, uint32_t out_idx) { return {in_idx, out_idx}; }
};

template <int Q>
struct CoverEdge {
    Vertex from = kNoVertex;
    Vertex to = kNoVertex;
    CostVector<Q> cost;
    Provenance prov;
};

// One cover graph G_t (t >= 1). Vertices keep their base-graph ids; members
// marks which of them are present at this level.
template <int Q>
struct CoverLevel {
    std::vector<uint8_t> members;   // bitmask per vertex, indexed by base id
    Vertex member_count = 0;
    std::vector<CoverEdge<Q>> edges;
    Adjacency out;
    Adjacency in;

    bool is_member(Vertex v) const { return members[v] != 0; }

    void finish(Vertex n) {
        out = build_out_adjacency(n, edges);
        in = build_in_adjacency(n, edges);
    }
};

struct CoverStatsRow {
    int level = 0;
    uint64_t k = 1;           // cover parameter, 2^level
    uint64_t vertices = 0;
    uint64_t edges = 0;
    double seconds = 0.0;
    double cumulative_seconds = 0.0;
};

struct CoverStats {
    std::vector<CoverStatsRow> rows;
};

namespace detail {

// Uniform read access to "the graph at level t" so the same construction
// code runs on the base graph and on cover levels.
template <int Q>
struct BaseLevelView {
    const Graph<Q>& g;
    Vertex n() const { return g.vertex_count(); }
    bool is_member(Vertex v) const { return true; }
    size_t edge_count() const { return g.edge_count(); }
    Vertex from(EdgeId e) const { return g.edge(e).from; }
    Vertex to(EdgeId e) const { return g.edge(e).to; }
    const CostVector<Q>& cost(EdgeId e) const { return g.edge(e).cost; }
    std::span<const EdgeId> out_edges(Vertex v) const { return g.out_edges(v); }
    std::span<const EdgeId> in_edges(Vertex v) const { return g.in_edges(v); }
    uint32_t degree(Vertex v) const { return g.degree(v); }
};

template <int Q>
struct CoverLevelView {
    const CoverLevel<Q>& l;
    Vertex n_;
    Vertex n() const { return n_; }
    bool is_member(Vertex v) const { return l.is_member(v); }
    size_t edge_count() const { return l.edges.size(); }
    Vertex from(EdgeId e) const { return l.edges[e].from; }
    Vertex to(EdgeId e) const { return l.edges[e].to; }
    const CostVector<Q>& cost(EdgeId e) const { return l.edges[e].cost; }
    std::span<const EdgeId> out_edges(Vertex v) const { return l.out.at(v); }
    std::span<const EdgeId> in_edges(Vertex v) const { return l.in.at(v); }
    uint32_t degree(Vertex v) const { return l.out.degree(v) + l.in.degree(v); }
};

} // namespace detail

// LR-deg cover vertex selection: walk the level's vertices by ascending
// degree (ties by ascending id, degrees fixed up front); every vertex found
// outside the cover pushes its whole in/out neighborhood in. Afterwards no
// edge of the level joins two non-cover vertices.
template <typename View>
std::vector<uint8_t> lr_deg_select(const View& view) {
    const Vertex n = view.n();
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        if (view.is_member(v)) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        uint32_t da = view.degree(a), db = view.degree(b);
        return da != db ? da < db : a < b;
    });

    std::vector<uint8_t> cover(n, 0);
    for (Vertex v : order) {
        if (cover[v]) continue;
        for (EdgeId e : view.out_edges(v)) cover[view.to(e)] = 1;
        for (EdgeId e : view.in_edges(v)) cover[view.from(e)] = 1;
    }
    return cover;
}

// Admits every in/out pair. Replace to model turn restrictions at skipped
// vertices.
struct AdmitAllPairs {
    bool operator()(EdgeId, EdgeId) const { return true; }
};

// Builds the next level's edge set over a cover produced by lr_deg_select:
// edges between two cover vertices are copied, and every admissible in/out
// edge pair of a skipped vertex composes into a candidate (self-loops
// dropped). Per ordered vertex pair only mutually non-weakly-dominated
// candidates survive, first seen winning among equal costs.
template <int Q, typename View, typename Admissible = AdmitAllPairs>
std::vector<CoverEdge<Q>> build_cover_edges(const View& view,
                                            const std::vector<uint8_t>& cover,
                                            Admissible admissible = {}) {
    std::vector<CoverEdge<Q>> cand;
    for (EdgeId e = 0; e < view.edge_count(); ++e) {
        Vertex u = view.from(e), w = view.to(e);
        if (cover[u] && cover[w])
            cand.push_back({u, w, view.cost(e), Provenance::copied(e)});
    }
    for (Vertex x = 0; x < view.n(); ++x) {
        if (!view.is_member(x) || cover[x]) continue;
        for (EdgeId ein : view.in_edges(x)) {
            const Vertex u = view.from(ein);
            for (EdgeId eout : view.out_edges(x)) {
                const Vertex w = view.to(eout);
                if (u == w || !admissible(ein, eout)) continue;
                cand.push_back({u, w, add_cost(view.cost(ein), view.cost(eout)),
                                Provenance::pair(ein, eout)});
            }
        }
    }

    std::stable_sort(cand.begin(), cand.end(),
                     [](const CoverEdge<Q>& a, const CoverEdge<Q>& b) {
                         return a.from != b.from ? a.from < b.from : a.to < b.to;
                     });

    std::vector<CoverEdge<Q>> result;
    result.reserve(cand.size());
    size_t i = 0;
    std::vector<CoverEdge<Q>> bucket;
    while (i < cand.size()) {
        size_t j = i;
        bucket.clear();
        while (j < cand.size() && cand[j].from == cand[i].from && cand[j].to == cand[i].to) {
            const CoverEdge<Q>& c = cand[j];
            bool dominated = false;
            for (const CoverEdge<Q>& kept : bucket)
                if (weakly_dominates(kept.cost, c.cost)) { dominated = true; break; }
            if (!dominated) {
                size_t keep = 0;
                for (size_t k = 0; k < bucket.size(); ++k)
                    if (!weakly_dominates(c.cost, bucket[k].cost)) {
                        if (keep != k) bucket[keep] = bucket[k];
                        ++keep;
                    }
                bucket.resize(keep);
                bucket.push_back(c);
            }
            ++j;
        }
        result.insert(result.end(), bucket.begin(), bucket.end());
        i = j;
    }
    return result;
}

// Nested 2-path-cover hierarchy over a base graph: level t holds the cover
// graph whose parameter is k = 2^t. Immutable once built; safe to share
// across concurrent queries.
template <int Q>
class HierarchicalCover {
public:
    HierarchicalCover() = default;
    explicit HierarchicalCover(Graph<Q> base) : base_(std::move(base)) {
        top_level_of_.assign(base_.vertex_count(), 0);
    }

    const Graph<Q>& base() const { return base_; }
    int level_count() const { return static_cast<int>(levels_.size()); }
    int requested_levels() const { return requested_levels_; }
    const CoverLevel<Q>& level(int t) const { return levels_[t - 1]; }

    int top_level(Vertex v) const { return top_level_of_[v]; }

    // level the search expands v on when the hierarchy is truncated to cap
    int effective_top(Vertex v, int cap) const {
        return std::min<int>(top_level_of_[v], cap);
    }

    Vertex members_at(int t) const {
        return t == 0 ? base_.vertex_count() : levels_[t - 1].member_count;
    }

    std::span<const EdgeId> out_edges_at(int t, Vertex v) const {
        return t == 0 ? base_.out_edges(v) : levels_[t - 1].out.at(v);
    }
    std::span<const EdgeId> in_edges_at(int t, Vertex v) const {
        return t == 0 ? base_.in_edges(v) : levels_[t - 1].in.at(v);
    }
    Vertex edge_from(int t, EdgeId e) const {
        return t == 0 ? base_.edge(e).from : levels_[t - 1].edges[e].from;
    }
    Vertex edge_to(int t, EdgeId e) const {
        return t == 0 ? base_.edge(e).to : levels_[t - 1].edges[e].to;
    }
    const CostVector<Q>& edge_cost(int t, EdgeId e) const {
        return t == 0 ? base_.edge(e).cost : levels_[t - 1].edges[e].cost;
    }
    size_t edge_count_at(int t) const {
        return t == 0 ? base_.edge_count() : levels_[t - 1].edges.size();
    }

    // Expands a cover edge down to the base edge ids it represents, in path
    // order. The summed base costs equal the cover edge's cost.
    void unpack_edge(int t, EdgeId e, std::vector<EdgeId>& out) const {
        if (t == 0) {
            out.push_back(e);
            return;
        }
        const Provenance& p = levels_[t - 1].edges[e].prov;
        unpack_edge(t - 1, p.below_in, out);
        if (p.composed()) unpack_edge(t - 1, p.below_out, out);
    }

    std::vector<EdgeId> unpack_edge(int t, EdgeId e) const {
        std::vector<EdgeId> out;
        unpack_edge(t, e, out);
        return out;
    }

    void add_level(CoverLevel<Q> level) {
        levels_.push_back(std::move(level));
        const CoverLevel<Q>& l = levels_.back();
        for (Vertex v = 0; v < base_.vertex_count(); ++v)
            if (l.is_member(v)) top_level_of_[v] = static_cast<int>(levels_.size());
    }

    void set_requested_levels(int t) { requested_levels_ = t; }

private:
    Graph<Q> base_;
    std::vector<CoverLevel<Q>> levels_;
    std::vector<int32_t> top_level_of_;
    int requested_levels_ = 0;
};

// Resolves a requested truncation level against what was actually built:
// negative means "use everything", anything else is clamped to the built
// level count. Queries and bound precomputation must agree on this.
template <int Q>
inline int effective_cap(const HierarchicalCover<Q>& h, int requested) {
    return requested < 0 ? h.level_count() : std::min(requested, h.level_count());
}

// Builds `levels` nested covers bottom-up. Construction stops early at a
// fixed point (an empty cover, or a cover that no longer shrinks — the next
// level would repeat the current one); remaining stats rows repeat the fixed
// point so callers still get one row per requested level.
template <int Q>
HierarchicalCover<Q> build_hierarchy(Graph<Q> base, int levels, CoverStats* stats = nullptr) {
    using Clock = std::chrono::steady_clock;
    HierarchicalCover<Q> h(std::move(base));
    h.set_requested_levels(levels);

    double cumulative = 0.0;
    if (stats) {
        stats->rows.clear();
        stats->rows.push_back({0, 1, h.base().vertex_count(), h.base().edge_count(), 0.0, 0.0});
    }

    bool saturated = false;
    uint64_t fixed_vertices = 0, fixed_edges = 0;
    for (int t = 1; t <= levels; ++t) {
        if (saturated) {
            if (stats)
                stats->rows.push_back({t, uint64_t{1} << std::min(t, 62), fixed_vertices,
                                       fixed_edges, 0.0, cumulative});
            continue;
        }
        auto started = Clock::now();
        CoverLevel<Q> next;
        Vertex n = h.base().vertex_count();
        if (t == 1) {
            detail::BaseLevelView<Q> view{h.base()};
            next.members = lr_deg_select(view);
            next.edges = build_cover_edges<Q>(view, next.members);
        } else {
            detail::CoverLevelView<Q> view{h.level(t - 1), n};
            next.members = lr_deg_select(view);
            Vertex cover_count = 0;
            for (Vertex v = 0; v < n; ++v) cover_count += next.members[v];
            if (cover_count == h.level(t - 1).member_count) {
                // cover kept every member: the new level would be identical
                saturated = true;
                fixed_vertices = h.level(t - 1).member_count;
                fixed_edges = h.level(t - 1).edges.size();
                if (stats)
                    stats->rows.push_back({t, uint64_t{1} << std::min(t, 62), fixed_vertices,
                                           fixed_edges, 0.0, cumulative});
                continue;
            }
            next.edges = build_cover_edges<Q>(view, next.members);
        }
        next.member_count = 0;
        for (Vertex v = 0; v < n; ++v) next.member_count += next.members[v];
        next.finish(n);

        double secs = std::chrono::duration<double>(Clock::now() - started).count();
        cumulative += secs;
        if (stats)
            stats->rows.push_back({t, uint64_t{1} << std::min(t, 62), next.member_count,
                                   next.edges.size(), secs, cumulative});

        if (next.member_count == 0) {
            saturated = true;
            fixed_vertices = 0;
            fixed_edges = 0;
            continue;
        }
        h.add_level(std::move(next));
    }
    return h;
}

} // namespace hmls
