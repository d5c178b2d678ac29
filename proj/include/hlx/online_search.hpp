#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hlx/hypergraph.hpp"

namespace hlx {

enum class NeighborMode : std::uint8_t { OnTheFly, Precomputed };

struct SearchConfig {
    NeighborMode neighbor_mode = NeighborMode::OnTheFly;
    // stop once neither queue can improve the running answer; the returned
    // value is unaffected, only the traversal length
    bool early_global_cutoff = false;
};

// Minimum consecutive overlap along the walk; |e| for a single hyperedge.
std::uint32_t wod(const Hypergraph& h, std::span<const EdgeId> walk);

// Bidirectional priority search for max-reachability. Two max-queues grow
// walks from the hyperedges of each endpoint, always extending the walk with
// the highest overlap so far; the answer updates whenever a hyperedge has
// been reached from both sides. Scratch state is owned by the instance and
// reset per query, so one instance serves many queries but is not
// thread-safe; use one instance per thread.
class OnlineSearch {
public:
    OnlineSearch(const Hypergraph& h, SearchConfig cfg = {});

    std::uint32_t max_reach(VertexId u, VertexId v);

    std::uint64_t pops() const { return pops_; }
    std::uint64_t neighbor_scans() const { return neighbor_scans_; }

private:
    template <class F>
    void expand(EdgeId e, F&& fn);

    const Hypergraph* h_;
    SearchConfig cfg_;
    std::vector<std::vector<std::pair<EdgeId, std::uint32_t>>> pre_; // Precomputed mode
    NeighborCounter counter_;
    std::vector<std::uint32_t> visit_[2]; // best overlap seen per direction; 0 = unseen
    std::uint64_t pops_ = 0;
    std::uint64_t neighbor_scans_ = 0;
};

std::uint32_t mr_online(const Hypergraph& h, VertexId u, VertexId v, SearchConfig cfg = {});

} // namespace hlx
