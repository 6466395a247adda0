#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmls/cost_vector.hpp"

namespace hmls {

using Vertex = uint32_t;
using EdgeId = uint32_t;

constexpr Vertex kNoVertex = UINT32_MAX;
constexpr uint32_t kNoIndex = UINT32_MAX;

template <int Q>
struct Edge {
    Vertex from = kNoVertex;
    Vertex to = kNoVertex;
    CostVector<Q> cost;
};

// CSR-style adjacency: offsets[v]..offsets[v+1] index into ids, which holds
// edge indices of the owning edge array.
struct Adjacency {
    std::vector<uint32_t> offsets;
    std::vector<EdgeId> ids;

    std::span<const EdgeId> at(Vertex v) const {
        return {ids.data() + offsets[v], ids.data() + offsets[v + 1]};
    }
    uint32_t degree(Vertex v) const { return offsets[v + 1] - offsets[v]; }
};

template <typename EdgeT>
inline Adjacency build_out_adjacency(Vertex n, const std::vector<EdgeT>& edges) {
    Adjacency adj;
    adj.offsets.assign(n + 1, 0);
    for (const EdgeT& e : edges) ++adj.offsets[e.from + 1];
    for (Vertex v = 0; v < n; ++v) adj.offsets[v + 1] += adj.offsets[v];
    adj.ids.resize(edges.size());
    std::vector<uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (EdgeId i = 0; i < edges.size(); ++i) adj.ids[cursor[edges[i].from]++] = i;
    return adj;
}

template <typename EdgeT>
inline Adjacency build_in_adjacency(Vertex n, const std::vector<EdgeT>& edges) {
    Adjacency adj;
    adj.offsets.assign(n + 1, 0);
    for (const EdgeT& e : edges) ++adj.offsets[e.to + 1];
    for (Vertex v = 0; v < n; ++v) adj.offsets[v + 1] += adj.offsets[v];
    adj.ids.resize(edges.size());
    std::vector<uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (EdgeId i = 0; i < edges.size(); ++i) adj.ids[cursor[edges[i].to]++] = i;
    return adj;
}

// Directed multigraph with per-edge cost vectors. Parallel edges are allowed,
// self-loops are not (rejected at ingestion). Costs must be non-negative.
template <int Q>
class Graph {
public:
    Graph() = default;

    Graph(Vertex vertex_count, std::vector<Edge<Q>> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        for (const Edge<Q>& e : edges_) {
            if (e.from >= n_ || e.to >= n_)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.from == e.to)
                throw std::invalid_argument("self-loops are not allowed");
            for (int i = 0; i < Q; ++i)
                if (e.cost.v[i] < 0)
                    throw std::invalid_argument("negative cost on edge");
        }
        out_ = build_out_adjacency(n_, edges_);
        in_ = build_in_adjacency(n_, edges_);
    }

    Vertex vertex_count() const { return n_; }
    size_t edge_count() const { return edges_.size(); }
    static constexpr int criterion_count() { return Q; }

    const Edge<Q>& edge(EdgeId id) const { return edges_[id]; }
    const std::vector<Edge<Q>>& edges() const { return edges_; }

    std::span<const EdgeId> out_edges(Vertex v) const { return out_.at(v); }
    std::span<const EdgeId> in_edges(Vertex v) const { return in_.at(v); }
    uint32_t degree(Vertex v) const { return out_.degree(v) + in_.degree(v); }

    // names of the criteria, for reporting only (e.g. "distance", "time")
    std::vector<std::string> criterion_names;

private:
    Vertex n_ = 0;
    std::vector<Edge<Q>> edges_;
    Adjacency out_;
    Adjacency in_;
};

} // namespace hmls
