#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "hmls/bounds.hpp"
#include "hmls/cover.hpp"
#include "hmls/graph.hpp"
#include "hmls/pareto_set.hpp"

namespace hmls {

// One path prefix: s→v in the forward stage, v→d in the backward stage.
// Labels live in a per-query arena; `parent` encodes the path tree and
// (via_level, via_edge) the hierarchy edge that produced the label, so
// routes reconstruct without per-label allocation. A label evicted from its
// temp set is only flagged `dead` — its heap entry is skipped on pop.
template <int Q>
struct Label {
    CostVector<Q> cost;
    Vertex vertex = kNoVertex;
    uint32_t parent = kNoIndex;
    EdgeId via_edge = kNoIndex;
    int16_t via_level = -1;
    uint8_t backward = 0;
    uint8_t dead = 0;
};

struct QueryOptions {
    // Truncate the hierarchy to this many levels (-1: use every built
    // level); expansion from v then happens at min(top_level(v), cap).
    int level_cap = -1;
    bool tdiscard = true;         // truncated tsets instead of perm-set checks
    bool bounds = false;          // limit precomputation + estimate pruning
    bool backward_checks = true;  // domination checks in the backward stage
    bool check_lex_order = false; // verify the label-setting property while running
    double time_limit_s = 0.0;    // 0: unlimited
};

struct SearchStats {
    uint64_t labels_created = 0;   // counted at expansion, before any discard
    uint64_t labels_stored = 0;    // survived every check into a temp set
    uint64_t labels_settled = 0;
    uint64_t backward_created = 0; // stage-1 share of labels_created
    double seconds = 0.0;
    bool timed_out = false;
};

// (cost, arena index) pair as stored in temp/perm/backward lists.
template <int Q>
struct LabelEntry {
    CostVector<Q> cost;
    uint32_t label = kNoIndex;
};

// Composite route payload: arena index of the forward label plus the
// backward label it was joined with (the backward root alone when the
// forward search reached d itself).
struct Route {
    uint32_t forward = kNoIndex;
    uint32_t backward = kNoIndex;
};

template <int Q>
using RouteSet = ParetoSet<Q, Route>;

template <int Q>
struct QueryResult {
    RouteSet<Q> routes;
    SearchStats stats;
};

// true iff the tset weakly dominates the candidate's truncated cost. Under
// lexicographic settling every settled label's first component is already
// <= the candidate's, so this replaces the full perm-set check.
template <int Q>
inline bool t_discards(std::span<const CostVector<Q - 1>> tset, const CostVector<Q>& candidate) {
    return pareto_covers<Q - 1>(tset, truncate(candidate));
}

template <int Q>
inline bool tset_update(std::vector<CostVector<Q - 1>>& tset, const CostVector<Q>& settled) {
    return pareto_insert<Q - 1>(tset, truncate(settled));
}

// Joins one settled forward label with every backward label recorded at its
// vertex; each sum is a real s→d path cost, Pareto-filtered into `routes`.
template <int Q>
inline void connect_routes(const CostVector<Q>& forward_cost, uint32_t forward_label,
                           std::span<const LabelEntry<Q>> backward, RouteSet<Q>& routes) {
    for (const LabelEntry<Q>& b : backward)
        routes.insert(add_cost(forward_cost, b.cost), Route{forward_label, b.label});
}

// Stage-1 result: settled backward labels per vertex, each encoding a v→d
// path. Vertices on the (truncated) top level are the hits where expansion
// stopped; d itself always carries its zero-cost root. The forward stage may
// connect at any vertex holding labels — restricting connections to hits
// alone loses paths whose top vertex sits below the truncated top level.
template <int Q>
class BackwardRoutes {
public:
    std::span<const LabelEntry<Q>> labels(Vertex v) const { return lists_[v]; }
    bool has(Vertex v) const { return !lists_[v].empty(); }
    bool hit(Vertex v) const { return has(v) && top_of_[v] == top_; }
    std::span<const Vertex> touched() const { return touched_; }
    Vertex destination() const { return destination_; }
    int top_level() const { return top_; }

private:
    template <int>
    friend class QueryContext;

    void reset(Vertex n, Vertex d, int top) {
        if (lists_.size() != n) lists_.assign(n, {});
        if (top_of_.size() != n) top_of_.assign(n, 0);
        for (Vertex v : touched_) lists_[v].clear();
        touched_.clear();
        destination_ = d;
        top_ = top;
    }
    void record(Vertex v, const CostVector<Q>& cost, uint32_t label, int top_of_v) {
        if (lists_[v].empty()) touched_.push_back(v);
        lists_[v].push_back({cost, label});
        top_of_[v] = top_of_v;
    }

    std::vector<std::vector<LabelEntry<Q>>> lists_;
    std::vector<int32_t> top_of_;
    std::vector<Vertex> touched_;
    Vertex destination_ = kNoVertex;
    int top_ = 0;
};

// Reusable per-query workspace: label arena, lexicographic queue, per-vertex
// temp/perm/tset sets (reset lazily by epoch), stage-1 results and a bounds
// table. One context serves one query at a time; any number of contexts may
// share the same immutable hierarchy.
template <int Q>
class QueryContext {
    static_assert(Q >= 2, "multicriteria search needs at least two criteria");

public:
    explicit QueryContext(const HierarchicalCover<Q>& h)
        : h_(&h), vs_(h.base().vertex_count()) {}

    const HierarchicalCover<Q>& hierarchy() const { return *h_; }

    // Two-stage query: backward search from d up to the truncated top level,
    // then a forward search from s connecting at backward-settled vertices.
    // Returns the exact Pareto set of s→d path costs with one witness each.
    QueryResult<Q> run(Vertex s, Vertex d, const QueryOptions& opt = {}) {
        check_vertex(s);
        check_vertex(d);
        const auto started = Clock::now();
        begin_query(opt);

        QueryResult<Q> result;
        run_backward(d, opt);
        if (!stats_.timed_out) {
            next_epoch();
            run_forward(s, opt, result.routes);
        }

        stats_.seconds = std::chrono::duration<double>(Clock::now() - started).count();
        result.stats = stats_;
        return result;
    }

    // Stage 1 alone, for inspection and tests.
    const BackwardRoutes<Q>& backward_stage(Vertex d, const QueryOptions& opt = {}) {
        check_vertex(d);
        begin_query(opt);
        run_backward(d, opt);
        return bwd_;
    }

    const BackwardRoutes<Q>& backward_routes() const { return bwd_; }
    const BoundsTable<Q>& bounds() const { return bounds_; }
    const Label<Q>& label(uint32_t idx) const { return arena_[idx]; }

    // Base edge ids of the route, in travel order (empty for s == d).
    std::vector<EdgeId> route_edges(const Route& r) const {
        std::vector<EdgeId> out;
        std::vector<std::pair<int, EdgeId>> rev;
        for (uint32_t i = r.forward; i != kNoIndex; i = arena_[i].parent)
            if (arena_[i].via_edge != kNoIndex) rev.push_back({arena_[i].via_level, arena_[i].via_edge});
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            h_->unpack_edge(it->first, it->second, out);
        if (r.backward != kNoIndex)
            for (uint32_t i = r.backward; i != kNoIndex; i = arena_[i].parent)
                if (arena_[i].via_edge != kNoIndex)
                    h_->unpack_edge(arena_[i].via_level, arena_[i].via_edge, out);
        return out;
    }

    // Vertex walk of the route, travel order, including both endpoints.
    std::vector<Vertex> route_vertices(const Route& r) const {
        std::vector<EdgeId> edges = route_edges(r);
        std::vector<Vertex> out;
        if (edges.empty()) {
            uint32_t root = r.forward;
            while (root != kNoIndex && arena_[root].parent != kNoIndex) root = arena_[root].parent;
            if (root != kNoIndex) out.push_back(arena_[root].vertex);
            return out;
        }
        out.reserve(edges.size() + 1);
        for (EdgeId e : edges) out.push_back(h_->base().edge(e).from);
        out.push_back(h_->base().edge(edges.back()).to);
        return out;
    }

private:
    using Clock = std::chrono::steady_clock;

    struct VertexState {
        uint32_t epoch = 0;
        std::vector<LabelEntry<Q>> temp;
        std::vector<CostVector<Q>> perm;     // maintained only without t-discarding
        std::vector<CostVector<Q - 1>> tset;
    };

    struct HeapEntry {
        CostVector<Q> cost;
        uint32_t label = kNoIndex;
    };

    void check_vertex(Vertex v) const {
        if (v >= h_->base().vertex_count()) throw std::out_of_range("vertex id out of range");
    }

    void begin_query(const QueryOptions& opt) {
        cap_ = effective_cap(*h_, opt.level_cap);
        stats_ = {};
        arena_.clear();
        heap_.clear();
        next_epoch();
        deadline_set_ = opt.time_limit_s > 0;
        if (deadline_set_) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(opt.time_limit_s));
    }

    void next_epoch() {
        ++epoch_;
        heap_.clear();
        lex_seen_ = false;
    }

    VertexState& state(Vertex v) {
        VertexState& st = vs_[v];
        if (st.epoch != epoch_) {
            st.epoch = epoch_;
            st.temp.clear();
            st.perm.clear();
            st.tset.clear();
        }
        return st;
    }

    bool out_of_time() {
        if (!deadline_set_) return false;
        if ((++tick_ & 1023u) != 0) return false;
        if (Clock::now() < deadline_) return false;
        stats_.timed_out = true;
        return true;
    }

    // heap comparator: entry a settles later than b
    static bool later(const HeapEntry& a, const HeapEntry& b) {
        const int c = lex_compare(a.cost, b.cost);
        return c != 0 ? c > 0 : a.label > b.label;
    }
    void heap_push(const CostVector<Q>& cost, uint32_t label) {
        heap_.push_back({cost, label});
        std::push_heap(heap_.begin(), heap_.end(), later);
    }
    HeapEntry heap_pop() {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        HeapEntry e = heap_.back();
        heap_.pop_back();
        return e;
    }

    void check_lex(const CostVector<Q>& cost) {
        if (lex_seen_ && !lex_precedes(lex_prev_, cost))
            throw std::logic_error("label settled out of lexicographic order");
        lex_prev_ = cost;
        lex_seen_ = true;
    }

    uint32_t make_root(Vertex v, bool backward) {
        const uint32_t idx = static_cast<uint32_t>(arena_.size());
        Label<Q> l;
        l.cost = CostVector<Q>::zero();
        l.vertex = v;
        l.backward = backward ? 1 : 0;
        arena_.push_back(l);
        ++stats_.labels_stored;
        return idx;
    }

    // Candidate admission: bounds estimate (forward only), then tset or perm
    // dominance, then the temp set — dominated temp labels are evicted. The
    // unchecked variant (backward stage with checks off) replaces all of it
    // with a simple-path guard so the search still terminates.
    void insert_candidate(Vertex to, const CostVector<Q>& cost, uint32_t parent, EdgeId via,
                          int level, bool backward, bool checks, const QueryOptions& opt) {
        ++stats_.labels_created;
        if (backward) ++stats_.backward_created;

        VertexState& st = state(to);
        if (checks) {
            if (!backward && opt.bounds && bound_prune(cost, to, bounds_)) return;
            if (opt.tdiscard) {
                if (t_discards<Q>(st.tset, cost)) return;
            } else if (backward) {
                for (const LabelEntry<Q>& e : bwd_.labels(to))
                    if (weakly_dominates(e.cost, cost)) return;
            } else {
                if (pareto_covers<Q>(st.perm, cost)) return;
            }
            for (const LabelEntry<Q>& e : st.temp)
                if (weakly_dominates(e.cost, cost)) return;
            size_t keep = 0;
            for (size_t i = 0; i < st.temp.size(); ++i) {
                if (weakly_dominates(cost, st.temp[i].cost)) {
                    arena_[st.temp[i].label].dead = 1;
                } else {
                    if (keep != i) st.temp[keep] = st.temp[i];
                    ++keep;
                }
            }
            st.temp.resize(keep);
        } else {
            for (uint32_t i = parent; i != kNoIndex; i = arena_[i].parent)
                if (arena_[i].vertex == to) return;
        }

        const uint32_t idx = static_cast<uint32_t>(arena_.size());
        Label<Q> l;
        l.cost = cost;
        l.vertex = to;
        l.parent = parent;
        l.via_edge = via;
        l.via_level = static_cast<int16_t>(level);
        l.backward = backward ? 1 : 0;
        arena_.push_back(l);
        if (checks) st.temp.push_back({cost, idx});
        heap_push(cost, idx);
        ++stats_.labels_stored;
    }

    void settle_bookkeeping(Vertex v, const CostVector<Q>& cost, uint32_t idx, bool checks,
                            const QueryOptions& opt) {
        ++stats_.labels_settled;
        if (opt.check_lex_order) check_lex(cost);
        if (!checks) return;
        VertexState& st = state(v);
        for (size_t i = 0; i < st.temp.size(); ++i)
            if (st.temp[i].label == idx) {
                st.temp[i] = st.temp.back();
                st.temp.pop_back();
                break;
            }
        if (opt.tdiscard) tset_update<Q>(st.tset, cost);
    }

    // Stage 1: reverse search from d, expanding each vertex on its effective
    // top level; labels reaching the truncated top level are recorded and not
    // expanded further. Skipped entirely when d already sits on that level.
    void run_backward(Vertex d, const QueryOptions& opt) {
        bwd_.reset(h_->base().vertex_count(), d, cap_);
        const uint32_t root = make_root(d, /*backward=*/true);
        const int d_top = h_->effective_top(d, cap_);
        if (d_top == cap_) {
            // destination already on the (truncated) top level: it is the
            // sole hit, carrying its zero-cost root
            ++stats_.labels_settled;
            bwd_.record(d, CostVector<Q>::zero(), root, d_top);
            return;
        }

        const bool checks = opt.backward_checks;
        if (checks) state(d).temp.push_back({CostVector<Q>::zero(), root});
        heap_push(CostVector<Q>::zero(), root);

        while (!heap_.empty()) {
            if (out_of_time()) return;
            const HeapEntry top = heap_pop();
            if (arena_[top.label].dead) continue;
            const Vertex v = arena_[top.label].vertex;
            settle_bookkeeping(v, top.cost, top.label, checks, opt);

            const int t = h_->effective_top(v, cap_);
            bwd_.record(v, top.cost, top.label, t);
            if (t == cap_) continue; // hit: recorded, never expanded

            for (EdgeId e : h_->in_edges_at(t, v)) {
                const Vertex u = h_->edge_from(t, e);
                insert_candidate(u, add_cost(top.cost, h_->edge_cost(t, e)), top.label, e, t,
                                 /*backward=*/true, checks, opt);
            }
        }
    }

    // Stage 2: forward search from s, expanding each vertex on its effective
    // top level and connecting at every vertex stage 1 settled.
    void run_forward(Vertex s, const QueryOptions& opt, RouteSet<Q>& routes) {
        if (opt.bounds) compute_bounds(*h_, s, bwd_.destination(), cap_, bounds_);

        const uint32_t root = make_root(s, /*backward=*/false);
        state(s).temp.push_back({CostVector<Q>::zero(), root});
        heap_push(CostVector<Q>::zero(), root);

        while (!heap_.empty()) {
            if (out_of_time()) return;
            const HeapEntry top = heap_pop();
            if (arena_[top.label].dead) continue;
            const Vertex v = arena_[top.label].vertex;
            settle_bookkeeping(v, top.cost, top.label, /*checks=*/true, opt);

            if (bwd_.has(v)) connect_routes<Q>(top.cost, top.label, bwd_.labels(v), routes);

            const int t = h_->effective_top(v, cap_);
            for (EdgeId e : h_->out_edges_at(t, v)) {
                const Vertex u = h_->edge_to(t, e);
                insert_candidate(u, add_cost(top.cost, h_->edge_cost(t, e)), top.label, e, t,
                                 /*backward=*/false, /*checks=*/true, opt);
            }
        }
    }

    const HierarchicalCover<Q>* h_;
    std::vector<VertexState> vs_;
    std::vector<Label<Q>> arena_;
    std::vector<HeapEntry> heap_;
    BackwardRoutes<Q> bwd_;
    BoundsTable<Q> bounds_;
    SearchStats stats_;
    CostVector<Q> lex_prev_;
    Clock::time_point deadline_;
    uint64_t tick_ = 0;
    uint32_t epoch_ = 0;
    int cap_ = 0;
    bool deadline_set_ = false;
    bool lex_seen_ = false;
};

// One-shot hierarchical query (creates a fresh context; use QueryContext
// directly to amortize workspace allocation across queries).
template <int Q>
QueryResult<Q> hierarchical_mls(const HierarchicalCover<Q>& h, Vertex s, Vertex d,
                                const QueryOptions& opt = {}) {
    QueryContext<Q> ctx(h);
    return ctx.run(s, d, opt);
}

// Baseline label-setting search on the plain graph: level-0 expansion, full
// perm-set dominance checks, no tsets, no bounds. The returned cost set is
// the reference the hierarchical variants are tested against. Route payloads
// index a context that dies with this call; callers needing paths should run
// a QueryContext over a hierarchy instead.
template <int Q>
QueryResult<Q> classic_mls(const Graph<Q>& g, Vertex s, Vertex d, QueryOptions opt = {}) {
    HierarchicalCover<Q> h(g);
    opt.level_cap = 0;
    opt.tdiscard = false;
    opt.bounds = false;
    QueryContext<Q> ctx(h);
    return ctx.run(s, d, opt);
}

// Classic behavior on an existing hierarchy: truncate to level 0.
template <int Q>
QueryResult<Q> classic_mls(const HierarchicalCover<Q>& h, Vertex s, Vertex d,
                           QueryOptions opt = {}) {
    opt.level_cap = 0;
    opt.tdiscard = false;
    opt.bounds = false;
    QueryContext<Q> ctx(h);
    return ctx.run(s, d, opt);
}

} // namespace hmls
