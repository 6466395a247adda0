#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hmls/cover.hpp"

namespace hmls {

// Versioned little-endian binary hierarchy image. Edge records are written
// as in-memory PODs (layout pinned by the static_asserts below); membership
// bitmasks are stored byte-per-vertex. Rebuilding adjacency on load is cheap
// compared to cover construction, so only edges and membership persist.
namespace hcio {

constexpr uint32_t kMagic = 0x48434c53u; // "SLCH" little-endian on disk
constexpr uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ofstream& os, const T& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
void write_array(std::ofstream& os, const T* p, size_t count) {
    static_assert(std::is_trivially_copyable_v<T>);
    os.write(reinterpret_cast<const char*>(p), static_cast<std::streamsize>(count * sizeof(T)));
}

template <typename T>
void read_pod(std::ifstream& is, T& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    is.read(reinterpret_cast<char*>(&v), sizeof v);
}

template <typename T>
void read_array(std::ifstream& is, T* p, size_t count) {
    static_assert(std::is_trivially_copyable_v<T>);
    is.read(reinterpret_cast<char*>(p), static_cast<std::streamsize>(count * sizeof(T)));
}

} // namespace hcio

template <int Q>
void save_hierarchy(const HierarchicalCover<Q>& h, const std::string& path) {
    static_assert(std::is_trivially_copyable_v<Edge<Q>> && sizeof(Edge<Q>) == 8 + 8 * Q);
    static_assert(std::is_trivially_copyable_v<CoverEdge<Q>> && sizeof(CoverEdge<Q>) == 16 + 8 * Q);

    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    const Vertex n = h.base().vertex_count();
    hcio::write_pod(os, hcio::kMagic);
    hcio::write_pod(os, hcio::kVersion);
    hcio::write_pod(os, static_cast<uint32_t>(Q));
    hcio::write_pod(os, n);
    hcio::write_pod(os, static_cast<uint32_t>(h.level_count()));
    hcio::write_pod(os, static_cast<uint32_t>(h.requested_levels()));

    hcio::write_pod(os, static_cast<uint64_t>(h.base().edge_count()));
    hcio::write_array(os, h.base().edges().data(), h.base().edge_count());

    for (int t = 1; t <= h.level_count(); ++t) {
        const CoverLevel<Q>& l = h.level(t);
        hcio::write_pod(os, l.member_count);
        hcio::write_array(os, l.members.data(), n);
        hcio::write_pod(os, static_cast<uint64_t>(l.edges.size()));
        hcio::write_array(os, l.edges.data(), l.edges.size());
    }
    if (!os) throw std::runtime_error("write failed for " + path);
}

// Criterion count stored in a hierarchy file, for dispatching before the
// typed load.
inline uint32_t peek_criterion_count(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    uint32_t magic = 0, version = 0, q = 0;
    hcio::read_pod(is, magic);
    hcio::read_pod(is, version);
    hcio::read_pod(is, q);
    if (!is || magic != hcio::kMagic) throw std::runtime_error(path + ": not a hierarchy file");
    if (version != hcio::kVersion) throw std::runtime_error(path + ": unsupported version");
    return q;
}

template <int Q>
HierarchicalCover<Q> load_hierarchy(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    uint32_t magic = 0, version = 0, q = 0, n = 0, levels = 0, requested = 0;
    hcio::read_pod(is, magic);
    hcio::read_pod(is, version);
    hcio::read_pod(is, q);
    hcio::read_pod(is, n);
    hcio::read_pod(is, levels);
    hcio::read_pod(is, requested);
    if (!is || magic != hcio::kMagic) throw std::runtime_error(path + ": not a hierarchy file");
    if (version != hcio::kVersion) throw std::runtime_error(path + ": unsupported version");
    if (q != Q) throw std::runtime_error(path + ": criterion count mismatch");

    uint64_t m = 0;
    hcio::read_pod(is, m);
    std::vector<Edge<Q>> base_edges(m);
    hcio::read_array(is, base_edges.data(), m);
    if (!is) throw std::runtime_error(path + ": truncated file");

    HierarchicalCover<Q> h(Graph<Q>(n, std::move(base_edges)));
    h.set_requested_levels(static_cast<int>(requested));
    uint64_t below_count = m;
    for (uint32_t t = 1; t <= levels; ++t) {
        CoverLevel<Q> l;
        hcio::read_pod(is, l.member_count);
        l.members.resize(n);
        hcio::read_array(is, l.members.data(), n);
        uint64_t le = 0;
        hcio::read_pod(is, le);
        l.edges.resize(le);
        hcio::read_array(is, l.edges.data(), le);
        if (!is) throw std::runtime_error(path + ": truncated file");

        Vertex members = 0;
        for (Vertex v = 0; v < n; ++v) members += l.members[v] ? 1 : 0;
        if (members != l.member_count) throw std::runtime_error(path + ": corrupt membership");
        for (const CoverEdge<Q>& e : l.edges) {
            if (e.from >= n || e.to >= n || e.from == e.to ||
                e.prov.below_in >= below_count ||
                (e.prov.composed() && e.prov.below_out >= below_count))
                throw std::runtime_error(path + ": corrupt cover edge");
            for (int i = 0; i < Q; ++i)
                if (e.cost[i] < 0) throw std::runtime_error(path + ": corrupt cover edge");
        }
        below_count = le;
        l.finish(n);
        h.add_level(std::move(l));
    }
    return h;
}

} // namespace hmls
