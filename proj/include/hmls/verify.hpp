#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hmls/cover.hpp"
#include "hmls/graph.hpp"
#include "hmls/mls.hpp"
#include "hmls/pareto_set.hpp"
#include "hmls/random_graph.hpp"
#include "hmls/rng.hpp"

namespace hmls {

template <int Q>
std::vector<CostVector<Q>> lex_sorted(std::vector<CostVector<Q>> v) {
    std::sort(v.begin(), v.end(),
              [](const CostVector<Q>& a, const CostVector<Q>& b) { return lex_compare(a, b) < 0; });
    return v;
}

// Exhaustive reference: depth-first walk enumeration with per-vertex
// dominance pruning. A branch is cut when its prefix cost is weakly
// dominated by a cost already carried to the same vertex; since
// continuations are prefix-independent (no simple-path restriction), the
// dominating prefix explores every completion the cut branch could, so with
// non-negative costs the returned cost set is exact. Deliberately shares no
// machinery with the label-setting engine beyond cost algebra.
template <int Q>
std::vector<CostVector<Q>> pareto_dfs_oracle(const Graph<Q>& g, Vertex s, Vertex d) {
    std::vector<std::vector<CostVector<Q>>> seen(g.vertex_count());
    std::vector<CostVector<Q>> result;
    auto dfs = [&](auto&& self, Vertex v, const CostVector<Q>& cost) -> void {
        if (!pareto_insert<Q>(seen[v], cost)) return;
        if (v == d) {
            // any walk continuing through d and returning is componentwise
            // no better than this prefix, so stop here
            pareto_insert<Q>(result, cost);
            return;
        }
        for (EdgeId e : g.out_edges(v))
            self(self, g.edge(e).to, add_cost(cost, g.edge(e).cost));
    };
    dfs(dfs, s, CostVector<Q>::zero());
    return lex_sorted(std::move(result));
}

// Minimal one-to-all label-setting run over a plain graph: full settled-set
// dominance checks, lazy heap of raw (cost, vertex) pairs. Used to compare
// Pareto distances between hierarchy levels, where both sides go through
// this same implementation.
template <int Q>
std::vector<std::vector<CostVector<Q>>> mls_all_pareto(const Graph<Q>& g, Vertex s) {
    struct Entry {
        CostVector<Q> cost;
        Vertex v;
        uint64_t seq;
    };
    auto later = [](const Entry& a, const Entry& b) {
        const int c = lex_compare(a.cost, b.cost);
        return c != 0 ? c > 0 : a.seq > b.seq;
    };
    std::vector<Entry> heap;
    uint64_t seq = 0;
    auto push = [&](const CostVector<Q>& c, Vertex v) {
        heap.push_back({c, v, seq++});
        std::push_heap(heap.begin(), heap.end(), later);
    };

    std::vector<std::vector<CostVector<Q>>> perm(g.vertex_count());
    push(CostVector<Q>::zero(), s);
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), later);
        Entry e = heap.back();
        heap.pop_back();
        if (pareto_covers<Q>(perm[e.v], e.cost)) continue;
        perm[e.v].push_back(e.cost); // settles in lex order, so stays sorted
        for (EdgeId id : g.out_edges(e.v)) {
            const Edge<Q>& edge = g.edge(id);
            const CostVector<Q> nc = add_cost(e.cost, edge.cost);
            if (!pareto_covers<Q>(perm[edge.to], nc)) push(nc, edge.to);
        }
    }
    return perm;
}

// Materializes hierarchy level t as a plain graph on the full vertex id
// space (non-members are isolated).
template <int Q>
Graph<Q> level_as_graph(const HierarchicalCover<Q>& h, int t) {
    if (t == 0) return h.base();
    std::vector<Edge<Q>> edges;
    const CoverLevel<Q>& l = h.level(t);
    edges.reserve(l.edges.size());
    for (const CoverEdge<Q>& e : l.edges) edges.push_back({e.from, e.to, e.cost});
    return Graph<Q>(h.base().vertex_count(), std::move(edges));
}

// Structural cover checks: membership nesting and counts, top-level
// consistency, the independent-set guarantee one level below, per-pair
// mutual non-dominance, endpoint membership, and unpack integrity (cost sum
// and vertex contiguity) for every cover edge. Returns one line per
// violation.
template <int Q>
std::vector<std::string> verify_cover_invariants(const HierarchicalCover<Q>& h) {
    std::vector<std::string> bad;
    const Vertex n = h.base().vertex_count();
    auto complain = [&](int level, const std::string& what) {
        bad.push_back("level " + std::to_string(level) + ": " + what);
    };

    for (Vertex v = 0; v < n; ++v) {
        int expect = 0;
        for (int t = 1; t <= h.level_count(); ++t)
            if (h.level(t).is_member(v)) expect = t;
        if (h.top_level(v) != expect)
            complain(expect, "top level of vertex " + std::to_string(v) + " is " +
                                 std::to_string(h.top_level(v)));
    }

    for (int t = 1; t <= h.level_count(); ++t) {
        const CoverLevel<Q>& l = h.level(t);
        Vertex count = 0;
        for (Vertex v = 0; v < n; ++v) {
            const bool member = l.is_member(v);
            count += member ? 1 : 0;
            if (member && t > 1 && !h.level(t - 1).is_member(v))
                complain(t, "vertex " + std::to_string(v) + " not nested in level below");
        }
        if (count != l.member_count) complain(t, "member count mismatch");

        // no edge one level below may join two non-members (independent set)
        const size_t below_edges = h.edge_count_at(t - 1);
        for (EdgeId e = 0; e < below_edges; ++e) {
            const Vertex a = h.edge_from(t - 1, e), b = h.edge_to(t - 1, e);
            if (!l.is_member(a) && !l.is_member(b))
                complain(t, "edge " + std::to_string(e) + " below joins two non-members");
        }

        std::vector<EdgeId> ids(l.edges.size());
        for (EdgeId e = 0; e < l.edges.size(); ++e) ids[e] = e;
        std::sort(ids.begin(), ids.end(), [&](EdgeId x, EdgeId y) {
            const CoverEdge<Q>&a = l.edges[x], &b = l.edges[y];
            return a.from != b.from ? a.from < b.from : a.to < b.to;
        });
        for (size_t i = 0; i < ids.size();) {
            size_t j = i;
            const Vertex f = l.edges[ids[i]].from, to = l.edges[ids[i]].to;
            while (j < ids.size() && l.edges[ids[j]].from == f && l.edges[ids[j]].to == to) ++j;
            for (size_t x = i; x < j; ++x)
                for (size_t y = i; y < j; ++y)
                    if (x != y && weakly_dominates(l.edges[ids[x]].cost, l.edges[ids[y]].cost) &&
                        l.edges[ids[x]].cost != l.edges[ids[y]].cost)
                        complain(t, "parallel edges " + std::to_string(ids[x]) + "," +
                                        std::to_string(ids[y]) + " not mutually non-dominated");
            for (size_t x = i; x < j; ++x)
                for (size_t y = x + 1; y < j; ++y)
                    if (l.edges[ids[x]].cost == l.edges[ids[y]].cost)
                        complain(t, "parallel edges " + std::to_string(ids[x]) + "," +
                                        std::to_string(ids[y]) + " duplicated");
            i = j;
        }

        std::vector<EdgeId> base;
        for (EdgeId e = 0; e < l.edges.size(); ++e) {
            const CoverEdge<Q>& ce = l.edges[e];
            if (!l.is_member(ce.from) || !l.is_member(ce.to))
                complain(t, "edge " + std::to_string(e) + " endpoint not a member");
            base.clear();
            h.unpack_edge(t, e, base);
            if (base.empty()) {
                complain(t, "edge " + std::to_string(e) + " unpacks to nothing");
                continue;
            }
            CostVector<Q> sum;
            Vertex at = h.base().edge(base.front()).from;
            bool contiguous = at == ce.from;
            for (EdgeId b : base) {
                const Edge<Q>& be = h.base().edge(b);
                if (be.from != at) contiguous = false;
                at = be.to;
                sum = add_cost(sum, be.cost);
            }
            if (!contiguous || at != ce.to)
                complain(t, "edge " + std::to_string(e) + " unpacks non-contiguously");
            if (sum != ce.cost)
                complain(t, "edge " + std::to_string(e) + " unpack cost mismatch");
        }
    }
    return bad;
}

struct VerifyConfig {
    int graphs = 50;
    int pairs = 20;
    int levels = 5;   // hierarchical queries run with caps 0..levels
    Vertex max_n = 300;
    Cost max_cost = 20;
    uint64_t seed = 1;
};

struct VerifyReport {
    uint64_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct GraphSpec {
    Vertex n;
    uint64_t m;
    int q;
    Cost max_cost;
    uint64_t seed;

    std::string describe() const {
        return "graph{n=" + std::to_string(n) + " m=" + std::to_string(m) +
               " q=" + std::to_string(q) + " maxc=" + std::to_string(max_cost) +
               " seed=" + std::to_string(seed) + "}";
    }
};

// One deterministic instance family shared by every suite: suites drawing
// from the same master seed see the same graphs.
inline GraphSpec draw_graph_spec(Rng& master, const VerifyConfig& cfg, int index) {
    GraphSpec spec;
    spec.n = 2 + static_cast<Vertex>(master.bounded(cfg.max_n - 1));
    spec.m = master.bounded(3 * static_cast<uint64_t>(spec.n) + 1);
    spec.q = index % 2 == 0 ? 2 : 3;
    spec.max_cost = 1 + static_cast<Cost>(master.bounded(static_cast<uint64_t>(cfg.max_cost)));
    spec.seed = master.next();
    return spec;
}

namespace detail {

template <int Q>
void equivalence_one_graph(const GraphSpec& spec, const VerifyConfig& cfg, Rng& master,
                           VerifyReport& report) {
    const Graph<Q> g = generate_random_graph<Q>(spec.n, spec.m, spec.max_cost, spec.seed);
    const HierarchicalCover<Q> h = build_hierarchy<Q>(g, cfg.levels);
    QueryContext<Q> ctx(h);

    for (int p = 0; p < cfg.pairs; ++p) {
        const Vertex s = static_cast<Vertex>(master.bounded(spec.n));
        const Vertex d = static_cast<Vertex>(master.bounded(spec.n));
        const std::vector<CostVector<Q>> want = pareto_dfs_oracle(g, s, d);
        auto fail = [&](const std::string& runner, const std::vector<CostVector<Q>>& got) {
            std::string line = spec.describe() + " s=" + std::to_string(s) +
                               " d=" + std::to_string(d) + " " + runner + ": got {";
            for (const auto& c : got) line += to_string(c);
            line += "} want {";
            for (const auto& c : want) line += to_string(c);
            line += "}";
            report.failures.push_back(line);
        };
        auto check = [&](const std::string& runner, const QueryResult<Q>& res) {
            ++report.checks;
            const std::vector<CostVector<Q>> got = lex_sorted(res.routes.costs());
            if (got != want) fail(runner, got);
        };

        QueryOptions classic;
        classic.level_cap = 0;
        classic.tdiscard = false;
        classic.check_lex_order = true;
        try {
            check("classic", ctx.run(s, d, classic));
            for (int cap = 0; cap <= cfg.levels; ++cap)
                for (const bool td : {true, false})
                    for (const bool bd : {false, true}) {
                        QueryOptions opt;
                        opt.level_cap = cap;
                        opt.tdiscard = td;
                        opt.bounds = bd;
                        opt.check_lex_order = true;
                        check("hmls level=" + std::to_string(cap) + " tdiscard=" +
                                  std::to_string(td) + " bounds=" + std::to_string(bd),
                              ctx.run(s, d, opt));
                    }
            QueryOptions nocheck;
            nocheck.backward_checks = false;
            nocheck.check_lex_order = true;
            check("hmls backward-unchecked", ctx.run(s, d, nocheck));
        } catch (const std::exception& e) {
            report.failures.push_back(spec.describe() + " s=" + std::to_string(s) +
                                      " d=" + std::to_string(d) + ": exception " + e.what());
        }
    }
}

template <int Q>
void preservation_one_graph(const GraphSpec& spec, const VerifyConfig& cfg,
                            VerifyReport& report) {
    const Graph<Q> g = generate_random_graph<Q>(spec.n, spec.m, spec.max_cost, spec.seed);
    const HierarchicalCover<Q> h = build_hierarchy<Q>(g, cfg.levels);
    for (int t = 0; t + 1 <= h.level_count(); ++t) {
        if (t > 2) break; // distances proven level-over-level; three steps checked
        const Graph<Q> low = level_as_graph(h, t);
        const Graph<Q> high = level_as_graph(h, t + 1);
        const CoverLevel<Q>& upper = h.level(t + 1);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            if (!upper.is_member(u)) continue;
            const auto from_low = mls_all_pareto(low, u);
            const auto from_high = mls_all_pareto(high, u);
            for (Vertex w = 0; w < g.vertex_count(); ++w) {
                if (!upper.is_member(w)) continue;
                ++report.checks;
                if (lex_sorted(from_low[w]) != lex_sorted(from_high[w]))
                    report.failures.push_back(
                        spec.describe() + " levels " + std::to_string(t) + "->" +
                        std::to_string(t + 1) + " pair (" + std::to_string(u) + "," +
                        std::to_string(w) + "): Pareto distances differ");
            }
        }
    }
}

} // namespace detail

// Oracle equivalence: exhaustive-enumeration reference vs the baseline
// label-setting search vs the two-stage hierarchical search at every level
// cap and flag combination, exact cost-set equality.
inline VerifyReport run_equivalence_suite(const VerifyConfig& cfg) {
    VerifyReport report;
    Rng master(cfg.seed);
    for (int i = 0; i < cfg.graphs; ++i) {
        const GraphSpec spec = draw_graph_spec(master, cfg, i);
        if (spec.q == 2)
            detail::equivalence_one_graph<2>(spec, cfg, master, report);
        else
            detail::equivalence_one_graph<3>(spec, cfg, master, report);
    }
    return report;
}

// Structural cover invariants over the same generated family.
inline VerifyReport run_cover_suite(const VerifyConfig& cfg) {
    VerifyReport report;
    Rng master(cfg.seed);
    for (int i = 0; i < cfg.graphs; ++i) {
        const GraphSpec spec = draw_graph_spec(master, cfg, i);
        auto run = [&]<int Q>() {
            const Graph<Q> g = generate_random_graph<Q>(spec.n, spec.m, spec.max_cost, spec.seed);
            const HierarchicalCover<Q> h = build_hierarchy<Q>(g, cfg.levels);
            ++report.checks;
            for (const std::string& v : verify_cover_invariants(h))
                report.failures.push_back(spec.describe() + " " + v);
        };
        if (spec.q == 2)
            run.template operator()<2>();
        else
            run.template operator()<3>();
    }
    return report;
}

// Pareto-distance preservation between consecutive levels (pairs drawn from
// the upper level's members), checked through one shared one-to-all search.
inline VerifyReport run_preservation_suite(const VerifyConfig& cfg) {
    VerifyReport report;
    Rng master(cfg.seed);
    for (int i = 0; i < cfg.graphs; ++i) {
        const GraphSpec spec = draw_graph_spec(master, cfg, i);
        if (spec.q == 2)
            detail::preservation_one_graph<2>(spec, cfg, report);
        else
            detail::preservation_one_graph<3>(spec, cfg, report);
    }
    return report;
}

} // namespace hmls
