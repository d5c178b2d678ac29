#pragma once

#include <cstdint>
#include <vector>

#include "hlx/hypergraph.hpp"

namespace hlx {

// Total importance order over hyperedges. Weight of e is the sum of squared
// member degrees, so hyperedges whose vertices appear in many other
// hyperedges rank first. Rank 0 is the most important; equal weights break
// toward the smaller id. Immutable once computed.
struct HyperedgeOrder {
    std::vector<std::uint32_t> rank;       // per hyperedge, permutation of [0, m)
    std::vector<EdgeId> by_rank;           // inverse permutation
    std::vector<unsigned __int128> weight; // per hyperedge

    bool outranks(EdgeId a, EdgeId b) const { return rank[a] < rank[b]; }
};

HyperedgeOrder compute_order(const Hypergraph& h);

} // namespace hlx
