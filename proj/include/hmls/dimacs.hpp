#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "hmls/graph.hpp"

namespace hmls {

// One multi-criteria graph source: paths[j] supplies criterion j, all files
// listing the same arcs in the same order. expect_* of 0 means unchecked.
struct DimacsSource {
    std::vector<std::string> paths;
    Vertex expect_vertices = 0;
    uint64_t expect_edges = 0; // header arc count, before self-loop drops
};

namespace detail {

struct DimacsArcs {
    Vertex n = 0;
    uint64_t m = 0;
    std::vector<Vertex> from; // 1-based as read
    std::vector<Vertex> to;
    std::vector<Cost> weight;
};

// gzopen reads plain files too, so one reader covers both encodings.
inline DimacsArcs read_dimacs_file(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    DimacsArcs arcs;
    bool have_header = false;
    char line[256];
    uint64_t lineno = 0;
    auto fail = [&](const std::string& what) {
        gzclose(f);
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
    };
    while (gzgets(f, line, sizeof line)) {
        ++lineno;
        if (!std::strchr(line, '\n')) { // swallow the rest of an overlong line
            int c;
            while ((c = gzgetc(f)) != -1 && c != '\n') {}
        }
        if (line[0] == 'c' || line[0] == '\n' || line[0] == '\r' || line[0] == '\0') continue;
        if (line[0] == 'p') {
            unsigned long long n = 0, m = 0;
            if (std::sscanf(line, "p sp %llu %llu", &n, &m) != 2) fail("bad problem line");
            if (have_header) fail("duplicate problem line");
            have_header = true;
            arcs.n = static_cast<Vertex>(n);
            arcs.m = m;
            arcs.from.reserve(m);
            arcs.to.reserve(m);
            arcs.weight.reserve(m);
            continue;
        }
        if (line[0] == 'a') {
            if (!have_header) fail("arc before problem line");
            unsigned long long u = 0, v = 0;
            long long w = 0;
            if (std::sscanf(line, "a %llu %llu %lld", &u, &v, &w) != 3) fail("bad arc line");
            if (u < 1 || u > arcs.n || v < 1 || v > arcs.n) fail("vertex id out of range");
            if (w < 0) fail("negative arc weight");
            arcs.from.push_back(static_cast<Vertex>(u));
            arcs.to.push_back(static_cast<Vertex>(v));
            arcs.weight.push_back(static_cast<Cost>(w));
            continue;
        }
        fail("unrecognized line");
    }
    gzclose(f);
    if (!have_header) throw std::runtime_error(path + ": missing problem line");
    if (arcs.from.size() != arcs.m)
        throw std::runtime_error(path + ": arc count disagrees with header");
    return arcs;
}

} // namespace detail

// Parses q parallel DIMACS shortest-path files into one q-criteria graph.
// Headers and per-position arc endpoints must agree across files; ids are
// rebased to 0; self-loops are dropped (count reported via dropped_self_loops).
template <int Q>
Graph<Q> load_dimacs(const DimacsSource& src, uint64_t* dropped_self_loops = nullptr) {
    static_assert(Q >= 2);
    if (src.paths.size() != Q)
        throw std::runtime_error("expected " + std::to_string(Q) + " criterion files, got " +
                                 std::to_string(src.paths.size()));
    std::vector<detail::DimacsArcs> files;
    files.reserve(Q);
    for (const std::string& p : src.paths) files.push_back(detail::read_dimacs_file(p));

    const detail::DimacsArcs& first = files.front();
    for (int j = 1; j < Q; ++j) {
        if (files[j].n != first.n || files[j].m != first.m)
            throw std::runtime_error("header mismatch between " + src.paths[0] + " and " +
                                     src.paths[j]);
        for (uint64_t k = 0; k < first.m; ++k)
            if (files[j].from[k] != first.from[k] || files[j].to[k] != first.to[k])
                throw std::runtime_error("arc mismatch at position " + std::to_string(k + 1) +
                                         " between " + src.paths[0] + " and " + src.paths[j]);
    }
    if (src.expect_vertices && first.n != src.expect_vertices)
        throw std::runtime_error(src.paths[0] + ": vertex count differs from expectation");
    if (src.expect_edges && first.m != src.expect_edges)
        throw std::runtime_error(src.paths[0] + ": arc count differs from expectation");

    std::vector<Edge<Q>> edges;
    edges.reserve(first.m);
    uint64_t dropped = 0;
    for (uint64_t k = 0; k < first.m; ++k) {
        if (first.from[k] == first.to[k]) {
            ++dropped;
            continue;
        }
        Edge<Q> e;
        e.from = first.from[k] - 1;
        e.to = first.to[k] - 1;
        for (int j = 0; j < Q; ++j) e.cost[j] = files[j].weight[k];
        edges.push_back(e);
    }
    if (dropped_self_loops) *dropped_self_loops = dropped;
    return Graph<Q>(first.n, std::move(edges));
}

// Writes the graph back out as q parallel .gr files (criterion j to
// paths[j]), 1-based ids, matching what load_dimacs accepts.
template <int Q>
void write_dimacs(const Graph<Q>& g, const std::vector<std::string>& paths) {
    if (paths.size() != Q) throw std::runtime_error("need one output path per criterion");
    for (int j = 0; j < Q; ++j) {
        std::ofstream out(paths[j], std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + paths[j]);
        out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (size_t k = 0; k < g.edge_count(); ++k) {
            const Edge<Q>& e = g.edge(static_cast<EdgeId>(k));
            out << "a " << (e.from + 1) << ' ' << (e.to + 1) << ' ' << e.cost[j] << '\n';
        }
        if (!out) throw std::runtime_error("write failed for " + paths[j]);
    }
}

} // namespace hmls
