#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hmls/cover.hpp"
#include "hmls/mls.hpp"
#include "hmls/rng.hpp"

namespace hmls {

struct BenchConfig {
    int max_level = 10; // one row per truncation level 0..max_level
    int pairs = 100;
    uint64_t seed = 42;
    bool tdiscard = true;
    bool bounds = false;
    double time_limit_s = 0.0;
    bool check_lex_order = false;
};

// One table row, means over the pairs that finished within the time limit.
struct StatsRow {
    int level = 0;
    double mean_s = 0, max_s = 0;
    double mean_labels_m = 0, max_labels_m = 0; // labels created, in millions
    int pairs = 0;    // finished pairs contributing to the means
    int timeouts = 0; // sampled but excluded
};

struct QueryRecord {
    int pair_index = 0;
    Vertex s = 0, d = 0;
    int level = 0;
    double seconds = 0;
    uint64_t labels_created = 0;
    uint64_t labels_stored = 0;
    uint64_t routes = 0;
    bool timed_out = false;
};

struct BenchResult {
    std::vector<StatsRow> rows;
    std::vector<QueryRecord> records;
    int unreachable_pairs = 0; // pairs with an empty Pareto set (level-0 verdict)
};

// Runs the same uniformly sampled pair set at every truncation level. Query
// timing excludes hierarchy construction; label counts and routes are
// deterministic for a fixed seed, timings are not.
template <int Q>
BenchResult run_bench(const HierarchicalCover<Q>& h, const BenchConfig& cfg) {
    const Vertex n = h.base().vertex_count();
    Rng rng(cfg.seed);
    std::vector<std::pair<Vertex, Vertex>> pairs(static_cast<size_t>(cfg.pairs));
    for (auto& p : pairs)
        p = {static_cast<Vertex>(rng.bounded(n)), static_cast<Vertex>(rng.bounded(n))};

    BenchResult result;
    QueryContext<Q> ctx(h);
    for (int level = 0; level <= cfg.max_level; ++level) {
        StatsRow row;
        row.level = level;
        double sum_s = 0;
        uint64_t sum_labels = 0, max_labels = 0;
        for (int i = 0; i < cfg.pairs; ++i) {
            QueryOptions opt;
            opt.level_cap = level;
            opt.tdiscard = cfg.tdiscard;
            opt.bounds = cfg.bounds;
            opt.time_limit_s = cfg.time_limit_s;
            opt.check_lex_order = cfg.check_lex_order;
            const QueryResult<Q> res = ctx.run(pairs[i].first, pairs[i].second, opt);

            QueryRecord rec;
            rec.pair_index = i;
            rec.s = pairs[i].first;
            rec.d = pairs[i].second;
            rec.level = level;
            rec.seconds = res.stats.seconds;
            rec.labels_created = res.stats.labels_created;
            rec.labels_stored = res.stats.labels_stored;
            rec.routes = res.routes.size();
            rec.timed_out = res.stats.timed_out;
            result.records.push_back(rec);

            if (rec.timed_out) {
                ++row.timeouts;
                continue;
            }
            ++row.pairs;
            sum_s += rec.seconds;
            row.max_s = std::max(row.max_s, rec.seconds);
            sum_labels += rec.labels_created;
            max_labels = std::max(max_labels, rec.labels_created);
            if (level == 0 && rec.routes == 0) ++result.unreachable_pairs;
        }
        if (row.pairs > 0) {
            row.mean_s = sum_s / row.pairs;
            row.mean_labels_m = static_cast<double>(sum_labels) / row.pairs / 1e6;
        }
        row.max_labels_m = static_cast<double>(max_labels) / 1e6;
        result.rows.push_back(row);
    }
    return result;
}

inline void write_cover_stats_csv(const CoverStats& stats, std::ostream& os) {
    os << "level,k,vertices,edges,seconds,cumulative_seconds\n";
    char buf[160];
    for (const CoverStatsRow& r : stats.rows) {
        std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%llu,%.6f,%.6f\n", r.level,
                      static_cast<unsigned long long>(r.k),
                      static_cast<unsigned long long>(r.vertices),
                      static_cast<unsigned long long>(r.edges), r.seconds, r.cumulative_seconds);
        os << buf;
    }
}

inline void write_bench_csv(const std::vector<StatsRow>& rows, std::ostream& os) {
    os << "level,mean_s,max_s,mean_labels_M,max_labels_M,pairs,timeouts\n";
    char buf[160];
    for (const StatsRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.6f,%d,%d\n", r.level, r.mean_s,
                      r.max_s, r.mean_labels_m, r.max_labels_m, r.pairs, r.timeouts);
        os << buf;
    }
}

} // namespace hmls
