#pragma once

#include <cstdint>
#include <vector>

#include "hlx/hypergraph.hpp"
#include "hlx/order.hpp"

namespace hlx {

class UnionFind {
public:
    explicit UnionFind(std::uint32_t n) { reset(n); }

    void reset(std::uint32_t n) {
        parent_.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
        size_.assign(n, 1);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// Brute-force reference answers, computed by descending-threshold
// connectivity over the hyperedge overlap graph. Deliberately independent of
// the label index and the online search; everything else is validated
// against this class. Pairwise overlaps are enumerated once per graph.
class ReachOracle {
public:
    explicit ReachOracle(const Hypergraph& h);

    // largest s such that u s-reaches v; 0 when no connecting walk exists
    std::uint32_t max_reach(VertexId u, VertexId v) const;

    // largest s such that u s-reaches hyperedge e; 0 when unreachable
    std::uint32_t vertex_to_edge(VertexId u, EdgeId e) const;

    bool s_reach(VertexId u, VertexId v, std::uint32_t s) const;

    // n*n matrix of max_reach values (row-major); diagonal holds MR(u, u)
    std::vector<std::uint32_t> all_pairs() const;

    // m*m matrix of the best walk overlap between distinct hyperedges
    // (minimax over the overlap graph); diagonal is 0
    std::vector<std::uint32_t> edge_bottlenecks() const;

    const Hypergraph& graph() const { return *h_; }

private:
    const Hypergraph* h_;
    std::uint32_t max_od_ = 0;
    // overlapping pairs bucketed by overlap degree, index 1..delta
    std::vector<std::vector<std::pair<EdgeId, EdgeId>>> by_od_;
};

// One-shot wrappers over ReachOracle.
std::uint32_t mr_oracle(const Hypergraph& h, VertexId u, VertexId v);
std::uint32_t vte_oracle(const Hypergraph& h, VertexId u, EdgeId e);
bool s_reach_oracle(const Hypergraph& h, VertexId u, VertexId v, std::uint32_t s);

// Best walk overlap from any hyperedge more important than e to e, measured
// over unrestricted walks; 0 when nothing outranking e connects to it.
std::uint32_t mcd_bruteforce(const Hypergraph& h, const HyperedgeOrder& order, EdgeId e);

} // namespace hlx
