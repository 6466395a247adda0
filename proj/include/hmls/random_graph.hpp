#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hmls/graph.hpp"
#include "hmls/rng.hpp"

namespace hmls {

// Deterministic random instance: a spanning arborescence over a shuffled
// vertex order (so everything is reachable from the order's first vertex)
// plus uniform extra arcs, all costs uniform in [1, max_cost]. Parallel arcs
// may occur; self-loops never.
template <int Q>
Graph<Q> generate_random_graph(Vertex n, uint64_t m, Cost max_cost, uint64_t seed) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
    if (max_cost < 1) throw std::invalid_argument("max_cost must be at least 1");
    Rng rng(seed);

    std::vector<Vertex> order(n);
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    for (Vertex i = n; i > 1; --i) {
        const uint64_t j = rng.bounded(i);
        std::swap(order[i - 1], order[j]);
    }

    auto draw_cost = [&] {
        CostVector<Q> c;
        for (int i = 0; i < Q; ++i) c[i] = 1 + static_cast<Cost>(rng.bounded(static_cast<uint64_t>(max_cost)));
        return c;
    };

    std::vector<Edge<Q>> edges;
    edges.reserve(m);
    for (Vertex i = 1; i < n && edges.size() < m; ++i) {
        const Vertex parent = order[rng.bounded(i)];
        edges.push_back({parent, order[i], draw_cost()});
    }
    while (edges.size() < m) {
        const Vertex u = static_cast<Vertex>(rng.bounded(n));
        Vertex v = static_cast<Vertex>(rng.bounded(n));
        if (n > 1) {
            while (v == u) v = static_cast<Vertex>(rng.bounded(n));
        } else {
            break; // single vertex: no non-loop arc exists
        }
        edges.push_back({u, v, draw_cost()});
    }
    return Graph<Q>(n, std::move(edges));
}

// Road-network-like bi-criteria instance at benchmark scale: a width×height
// grid whose segments are a random spanning tree plus random extra grid
// adjacencies, every segment carried as two opposing arcs (so the graph is
// strongly connected). Criterion 0 is length; criterion 1 is travel time,
// length scaled by a per-segment speed class. Classes cluster along grid
// lines — every 16th line is fast, every 4th arterial — giving the
// short-but-slow versus long-but-fast tension that makes Pareto sets
// non-trivial. Deterministic for a fixed seed.
inline Graph<2> generate_road_grid(uint32_t width, uint32_t height, double extra_fraction,
                                   uint64_t seed) {
    if (width < 2 || height < 2) throw std::invalid_argument("grid needs at least 2x2 vertices");
    const Vertex n = width * height;
    Rng rng(seed);

    auto id = [&](uint32_t x, uint32_t y) { return static_cast<Vertex>(y * width + x); };

    // candidate segments: all right/down grid adjacencies
    struct Segment {
        Vertex a, b;
        uint32_t line; // 0 = horizontal row y, 1 = vertical col x, packed below
        bool horizontal;
    };
    std::vector<Segment> all;
    all.reserve(static_cast<size_t>(2) * n);
    for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x) {
            if (x + 1 < width) all.push_back({id(x, y), id(x + 1, y), y, true});
            if (y + 1 < height) all.push_back({id(x, y), id(x, y + 1), x, false});
        }

    // random spanning tree (shuffled Kruskal over the grid segments)
    for (size_t i = all.size(); i > 1; --i) {
        const uint64_t j = rng.bounded(i);
        std::swap(all[i - 1], all[j]);
    }
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<uint8_t> chosen(all.size(), 0);
    Vertex joined = 0;
    for (size_t i = 0; i < all.size() && joined + 1 < n; ++i) {
        const Vertex ra = find(all[i].a), rb = find(all[i].b);
        if (ra == rb) continue;
        parent[ra] = rb;
        chosen[i] = 1;
        ++joined;
    }
    for (size_t i = 0; i < all.size(); ++i)
        if (!chosen[i] && rng.bounded(1u << 20) < static_cast<uint64_t>(extra_fraction * (1u << 20)))
            chosen[i] = 1;

    // speed class by line: fast corridors every 16th line, arterials every
    // 4th, local otherwise, with per-segment jitter
    auto speed_of = [&](const Segment& s) -> Cost {
        uint64_t jitter = rng.bounded(2);
        if (s.line % 16 == 8) return 7 + static_cast<Cost>(jitter);  // 7..8
        if (s.line % 4 == 2) return 5 + static_cast<Cost>(jitter);   // 5..6
        return 2 + static_cast<Cost>(rng.bounded(2));                // 2..3
    };

    std::vector<Edge<2>> edges;
    for (size_t i = 0; i < all.size(); ++i) {
        if (!chosen[i]) continue;
        const Segment& s = all[i];
        const Cost dist = 100 + static_cast<Cost>(rng.bounded(900)); // 100..999
        const Cost speed = speed_of(s);
        const Cost time = (dist * 10 + speed - 1) / speed;
        edges.push_back({s.a, s.b, {dist, time}});
        edges.push_back({s.b, s.a, {dist, time}});
    }
    Graph<2> g(n, std::move(edges));
    g.criterion_names = {"distance", "time"};
    return g;
}

} // namespace hmls
