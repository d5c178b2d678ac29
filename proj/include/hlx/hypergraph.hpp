#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hlx/errors.hpp"

namespace hlx {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected hypergraph in dual CSR form: hyperedge -> sorted member vertices
// and vertex -> sorted incident hyperedges. Vertex ids are dense; the source
// tokens they were remapped from are kept in original_id for round-tripping.
// Immutable after construction, safe for concurrent reads.
struct Hypergraph {
    std::uint32_t n = 0; // vertices
    std::uint32_t m = 0; // hyperedges

    std::vector<std::uint64_t> edge_off; // m+1
    std::vector<VertexId> edge_vtx;      // members, sorted within each edge
    std::vector<std::uint64_t> vtx_off;  // n+1
    std::vector<EdgeId> vtx_edge;        // incident edges, sorted per vertex
    std::vector<std::uint64_t> original_id; // n, dense id -> source token

    std::span<const VertexId> edge(EdgeId e) const {
        return {edge_vtx.data() + edge_off[e], edge_vtx.data() + edge_off[e + 1]};
    }
    std::span<const EdgeId> incident(VertexId v) const {
        return {vtx_edge.data() + vtx_off[v], vtx_edge.data() + vtx_off[v + 1]};
    }
    std::uint32_t edge_size(EdgeId e) const {
        return static_cast<std::uint32_t>(edge_off[e + 1] - edge_off[e]);
    }
    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(vtx_off[v + 1] - vtx_off[v]);
    }

    void check_vertex(VertexId v) const {
        if (v >= n) throw ArgumentError("vertex id out of range: " + std::to_string(v));
    }
    void check_edge(EdgeId e) const {
        if (e >= m) throw ArgumentError("hyperedge id out of range: " + std::to_string(e));
    }

    // Builds from token lists: dedups within each edge, remaps tokens to dense
    // ids in first-appearance order. Empty edge lists are rejected.
    static Hypergraph from_tokens(const std::vector<std::vector<std::uint64_t>>& edges);

    // Builds from dense vertex lists over [0, n); original ids become identity.
    static Hypergraph from_dense(std::uint32_t n, std::vector<std::vector<VertexId>> edges);
};

struct GraphStats {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t d = 0;         // max vertex degree
    std::uint32_t delta = 0;     // max hyperedge size
    std::uint32_t eta_max = 0;   // same quantity as d, reported separately
    double eta_avg = 0.0;
    std::uint64_t incidence = 0; // total member slots
};

struct CompactResult {
    Hypergraph graph;
    // (removed edge, kept twin) pairs, ascending by removed id
    std::vector<std::pair<EdgeId, EdgeId>> removed;
};

// One hyperedge per line; tokens are unsigned integers split on spaces, tabs
// or commas; '#'/'%' comment lines and blank lines are skipped. Duplicate
// tokens within a line are dropped. Throws ParseError with the line number.
Hypergraph parse_hypergraph(std::istream& in);

// Drops exact-duplicate hyperedges, keeping the lowest id of each group.
// Max-reachability between every vertex pair is unchanged.
CompactResult compact(const Hypergraph& h);

// |e_i ∩ e_j| by linear merge of the sorted member lists.
std::uint32_t overlap_degree(const Hypergraph& h, EdgeId ei, EdgeId ej);

// All hyperedges sharing at least one vertex with e, paired with the overlap
// degree, ascending by id. e itself is excluded.
std::vector<std::pair<EdgeId, std::uint32_t>> neighbors(const Hypergraph& h, EdgeId e);

GraphStats compute_stats(const Hypergraph& h);

// Reusable overlap accumulator: enumerates neighbors of one hyperedge by
// scanning the incidence lists of its members. O(m) memory, reused across
// calls; not thread-safe.
class NeighborCounter {
public:
    explicit NeighborCounter(const Hypergraph& h)
        : h_(&h), count_(h.m, 0) {}

    template <class F>
    void for_each(EdgeId e, F&& fn) {
        touched_.clear();
        for (VertexId v : h_->edge(e)) {
            for (EdgeId other : h_->incident(v)) {
                if (other == e) continue;
                if (count_[other]++ == 0) touched_.push_back(other);
            }
        }
        for (EdgeId other : touched_) {
            fn(other, count_[other]);
            count_[other] = 0;
        }
    }

private:
    const Hypergraph* h_;
    std::vector<std::uint32_t> count_;
    std::vector<EdgeId> touched_;
};

} // namespace hlx
