// Command-line front end: build hierarchies from DIMACS inputs, run single
// queries, benchmark across truncation levels, generate synthetic instances,
// and run the self-verification suites. Vertex ids on this interface are
// 1-based, matching the DIMACS convention; internal ids are 0-based.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmls/hmls.hpp"

namespace {

using nlohmann::json;

template <typename F>
int dispatch_q(uint32_t q, F&& f) {
    switch (q) {
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        case 4: return f(std::integral_constant<int, 4>{});
        default: throw std::runtime_error("unsupported criterion count " + std::to_string(q));
    }
}

struct BuildArgs {
    std::vector<std::string> gr;
    int levels = 10;
    std::string out;
    std::string stats_csv;
};

int cmd_build(const BuildArgs& a) {
    return dispatch_q(static_cast<uint32_t>(a.gr.size()), [&](auto qc) {
        constexpr int Q = decltype(qc)::value;
        hmls::DimacsSource src;
        src.paths = a.gr;
        uint64_t dropped = 0;
        const hmls::Graph<Q> g = hmls::load_dimacs<Q>(src, &dropped);
        if (dropped)
            std::cerr << "warning: dropped " << dropped << " self-loop arcs\n";
        std::cerr << "loaded " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges, q=" << Q << "\n";

        hmls::CoverStats stats;
        const hmls::HierarchicalCover<Q> h = hmls::build_hierarchy<Q>(g, a.levels, &stats);
        if (a.stats_csv.empty()) {
            hmls::write_cover_stats_csv(stats, std::cout);
        } else {
            std::ofstream os(a.stats_csv);
            if (!os) throw std::runtime_error("cannot write " + a.stats_csv);
            hmls::write_cover_stats_csv(stats, os);
        }
        if (!a.out.empty()) {
            hmls::save_hierarchy(h, a.out);
            std::cerr << "hierarchy written to " << a.out << "\n";
        }
        return 0;
    });
}

struct QueryArgs {
    std::string hc;
    uint64_t from = 0, to = 0; // 1-based
    int level = -1;
    bool no_tdiscard = false;
    bool bounds = false;
    bool no_paths = false;
    double time_limit = 0;
};

int cmd_query(const QueryArgs& a) {
    return dispatch_q(hmls::peek_criterion_count(a.hc), [&](auto qc) {
        constexpr int Q = decltype(qc)::value;
        const hmls::HierarchicalCover<Q> h = hmls::load_hierarchy<Q>(a.hc);
        const uint64_t n = h.base().vertex_count();
        if (a.from < 1 || a.from > n || a.to < 1 || a.to > n)
            throw CLI::ValidationError("--from/--to must be within 1.." + std::to_string(n));

        hmls::QueryOptions opt;
        opt.level_cap = a.level;
        opt.tdiscard = !a.no_tdiscard;
        opt.bounds = a.bounds;
        opt.time_limit_s = a.time_limit;
        hmls::QueryContext<Q> ctx(h);
        const auto res = ctx.run(static_cast<hmls::Vertex>(a.from - 1),
                                 static_cast<hmls::Vertex>(a.to - 1), opt);

        for (const auto& entry : res.routes.entries()) {
            std::cout << "route " << hmls::to_string(entry.cost);
            if (!a.no_paths) {
                std::cout << " via";
                for (hmls::Vertex v : ctx.route_vertices(entry.payload))
                    std::cout << ' ' << (v + 1);
            }
            std::cout << '\n';
        }
        std::cout << res.routes.size() << " routes\n";
        std::cout << "labels created " << res.stats.labels_created << ", stored "
                  << res.stats.labels_stored << ", settled " << res.stats.labels_settled << '\n';
        std::cout << "time " << res.stats.seconds << " s"
                  << (res.stats.timed_out ? " (timed out)" : "") << '\n';
        return res.stats.timed_out ? 2 : 0;
    });
}

struct BenchArgs {
    std::string hc;
    int levels = 10;
    int pairs = 100;
    uint64_t seed = 42;
    bool no_tdiscard = false;
    bool bounds = false;
    double time_limit = 0;
    std::string out;
    std::string json_out;
};

int cmd_bench(const BenchArgs& a) {
    return dispatch_q(hmls::peek_criterion_count(a.hc), [&](auto qc) {
        constexpr int Q = decltype(qc)::value;
        const hmls::HierarchicalCover<Q> h = hmls::load_hierarchy<Q>(a.hc);
        hmls::BenchConfig cfg;
        cfg.max_level = a.levels;
        cfg.pairs = a.pairs;
        cfg.seed = a.seed;
        cfg.tdiscard = !a.no_tdiscard;
        cfg.bounds = a.bounds;
        cfg.time_limit_s = a.time_limit;
        const hmls::BenchResult res = hmls::run_bench<Q>(h, cfg);

        if (a.out.empty()) {
            hmls::write_bench_csv(res.rows, std::cout);
        } else {
            std::ofstream os(a.out);
            if (!os) throw std::runtime_error("cannot write " + a.out);
            hmls::write_bench_csv(res.rows, os);
        }
        if (res.unreachable_pairs)
            std::cerr << res.unreachable_pairs << " of " << a.pairs
                      << " sampled pairs are unreachable (kept, not resampled)\n";
        if (!a.json_out.empty()) {
            json doc;
            doc["config"] = {{"levels", a.levels},   {"pairs", a.pairs},
                             {"seed", a.seed},       {"tdiscard", !a.no_tdiscard},
                             {"bounds", a.bounds},   {"time_limit_s", a.time_limit}};
            doc["unreachable_pairs"] = res.unreachable_pairs;
            doc["rows"] = json::array();
            for (const auto& r : res.rows)
                doc["rows"].push_back({{"level", r.level},
                                       {"mean_s", r.mean_s},
                                       {"max_s", r.max_s},
                                       {"mean_labels_M", r.mean_labels_m},
                                       {"max_labels_M", r.max_labels_m},
                                       {"pairs", r.pairs},
                                       {"timeouts", r.timeouts}});
            doc["queries"] = json::array();
            for (const auto& r : res.records)
                doc["queries"].push_back({{"pair", r.pair_index},
                                          {"s", r.s + 1},
                                          {"d", r.d + 1},
                                          {"level", r.level},
                                          {"seconds", r.seconds},
                                          {"labels_created", r.labels_created},
                                          {"labels_stored", r.labels_stored},
                                          {"routes", r.routes},
                                          {"timed_out", r.timed_out}});
            std::ofstream os(a.json_out);
            if (!os) throw std::runtime_error("cannot write " + a.json_out);
            os << doc.dump(2) << '\n';
        }
        return 0;
    });
}

struct GenArgs {
    std::string kind = "road";
    uint32_t width = 514, height = 514;
    double extra = 0.39;
    uint64_t n = 300, m = 900;
    uint32_t q = 2;
    int64_t max_cost = 20;
    uint64_t seed = 7;
    std::vector<std::string> out;
};

int cmd_gen(const GenArgs& a) {
    if (a.kind == "road") {
        if (a.out.size() != 2) throw CLI::ValidationError("road graphs need two --out files");
        const hmls::Graph<2> g =
            hmls::generate_road_grid(a.width, a.height, a.extra, a.seed);
        hmls::write_dimacs(g, a.out);
        std::cerr << "road grid: " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " arcs\n";
        return 0;
    }
    return dispatch_q(a.q, [&](auto qc) {
        constexpr int Q = decltype(qc)::value;
        if (a.out.size() != Q)
            throw CLI::ValidationError("need one --out file per criterion");
        const hmls::Graph<Q> g = hmls::generate_random_graph<Q>(
            static_cast<hmls::Vertex>(a.n), a.m, a.max_cost, a.seed);
        hmls::write_dimacs(g, a.out);
        std::cerr << "random graph: " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " arcs\n";
        return 0;
    });
}

struct VerifyArgs {
    std::string suite = "all";
    int graphs = 50;
    int pairs = 20;
    int levels = 5;
    uint64_t max_n = 300;
    uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
    hmls::VerifyConfig cfg;
    cfg.graphs = a.graphs;
    cfg.pairs = a.pairs;
    cfg.levels = a.levels;
    cfg.max_n = static_cast<hmls::Vertex>(a.max_n);
    cfg.seed = a.seed;

    bool all_ok = true;
    auto report = [&](const std::string& name, const hmls::VerifyReport& r) {
        if (r.ok()) {
            std::cout << name << ": PASS (" << r.checks << " checks)\n";
            return;
        }
        all_ok = false;
        std::cout << name << ": FAIL (" << r.failures.size() << " failures, " << r.checks
                  << " checks)\n";
        size_t shown = 0;
        for (const std::string& f : r.failures) {
            std::cout << "  " << f << '\n';
            if (++shown == 10 && r.failures.size() > 10) {
                std::cout << "  ... " << (r.failures.size() - 10) << " more\n";
                break;
            }
        }
    };

    if (a.suite == "all" || a.suite == "equivalence")
        report("equivalence", hmls::run_equivalence_suite(cfg));
    if (a.suite == "all" || a.suite == "cover")
        report("cover", hmls::run_cover_suite(cfg));
    if (a.suite == "all" || a.suite == "preservation") {
        hmls::VerifyConfig pcfg = cfg;
        pcfg.graphs = std::min(cfg.graphs, 20);
        report("preservation", hmls::run_preservation_suite(pcfg));
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical multicriteria shortest-path toolkit"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "build a cover hierarchy from DIMACS .gr files");
    b->add_option("--gr", build.gr, "criterion files, one per criterion (optionally .gz)")
        ->required()
        ->expected(2, 4);
    b->add_option("--levels", build.levels, "cover levels to build")->default_val(10);
    b->add_option("--out", build.out, "hierarchy output file");
    b->add_option("--stats-csv", build.stats_csv, "write per-level stats CSV here (default stdout)");

    QueryArgs query;
    auto* qsub = app.add_subcommand("query", "run one multicriteria query");
    qsub->add_option("--hc", query.hc, "hierarchy file from build --out")->required();
    qsub->add_option("--from", query.from, "source vertex (1-based)")->required();
    qsub->add_option("--to", query.to, "destination vertex (1-based)")->required();
    qsub->add_option("--level", query.level, "truncate hierarchy to this level (-1: all)")
        ->default_val(-1);
    qsub->add_flag("--no-tdiscard", query.no_tdiscard, "use full dominance checks instead of tsets");
    qsub->add_flag("--bounds", query.bounds, "enable limit precomputation pruning");
    qsub->add_flag("--no-paths", query.no_paths, "print costs only");
    qsub->add_option("--time-limit", query.time_limit, "seconds per query (0: unlimited)")
        ->default_val(0.0);

    BenchArgs bench;
    auto* bn = app.add_subcommand("bench", "benchmark random pairs across truncation levels");
    bn->add_option("--hc", bench.hc, "hierarchy file")->required();
    bn->add_option("--levels", bench.levels, "highest truncation level")->default_val(10);
    bn->add_option("--pairs", bench.pairs, "random pairs to sample")->default_val(100);
    bn->add_option("--seed", bench.seed, "pair sampling seed")->default_val(42);
    bn->add_flag("--no-tdiscard", bench.no_tdiscard, "use full dominance checks instead of tsets");
    bn->add_flag("--bounds", bench.bounds, "enable limit precomputation pruning");
    bn->add_option("--time-limit", bench.time_limit, "seconds per query (0: unlimited)")
        ->default_val(0.0);
    bn->add_option("--out", bench.out, "stats CSV path (default stdout)");
    bn->add_option("--json", bench.json_out, "write per-query JSON mirror here");

    GenArgs gen;
    auto* gn = app.add_subcommand("gen", "generate a deterministic test instance");
    gn->add_option("--kind", gen.kind, "road|random")->default_val("road");
    gn->add_option("--width", gen.width, "road grid width")->default_val(514);
    gn->add_option("--height", gen.height, "road grid height")->default_val(514);
    gn->add_option("--extra", gen.extra, "road extra-segment fraction")->default_val(0.39);
    gn->add_option("--n", gen.n, "random graph vertices")->default_val(300);
    gn->add_option("--m", gen.m, "random graph arcs")->default_val(900);
    gn->add_option("--q", gen.q, "random graph criteria")->default_val(2);
    gn->add_option("--max-cost", gen.max_cost, "random graph cost ceiling")->default_val(20);
    gn->add_option("--seed", gen.seed, "generator seed")->default_val(7);
    gn->add_option("--out", gen.out, "output .gr files, one per criterion")->required();

    VerifyArgs verify;
    auto* vf = app.add_subcommand("verify", "run the self-verification suites");
    vf->add_option("--suite", verify.suite, "all|equivalence|cover|preservation")
        ->default_val("all");
    vf->add_option("--graphs", verify.graphs, "generated graphs per suite")->default_val(50);
    vf->add_option("--pairs", verify.pairs, "query pairs per graph")->default_val(20);
    vf->add_option("--levels", verify.levels, "hierarchy levels")->default_val(5);
    vf->add_option("--max-n", verify.max_n, "max generated graph size")->default_val(300);
    vf->add_option("--seed", verify.seed, "suite seed")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*b) return cmd_build(build);
        if (*qsub) return cmd_query(query);
        if (*bn) return cmd_bench(bench);
        if (*gn) return cmd_gen(gen);
        if (*vf) return cmd_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
