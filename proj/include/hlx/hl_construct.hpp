#pragma once

#include <cstdint>
#include <vector>

#include "hlx/hl_index.hpp"
#include "hlx/hypergraph.hpp"
#include "hlx/order.hpp"

namespace hlx {

struct ConstructionStats {
    std::uint64_t total_labels = 0;  // sum of per-vertex list sizes
    std::uint64_t queue_pushes = 0;
    std::uint64_t queue_pops = 0;
    std::uint64_t neighbor_insertions = 0;   // lifetime inserts into the neighbor index
    std::uint64_t neighbor_peak_total = 0;   // live entries across all lists, peak
    std::uint32_t neighbor_peak_single = 0;  // live entries in one list, peak
    std::uint32_t sources_skipped = 0;       // cover degree already saturated the size
    std::vector<std::uint32_t> mcd_at_epoch; // cover-degree value when each edge became source
    double wall_ms = 0.0;
};

struct FastBuildResult {
    HLIndex index;
    DualIndex dual;
    ConstructionStats stats;
};

// Label construction by hyperedge importance: each source in rank order runs
// a max-priority traversal over the overlap graph, labeling first-visited
// vertices, with on-line cover detection pruning walks whose reachability a
// more important hyperedge already explains.
HLIndex build_basic(const Hypergraph& h, const HyperedgeOrder& order);

// Same label set, computed with two accelerations: running cover-degree
// lower bounds replace the per-pop cover search, and a lazily built,
// self-pruning neighbor index replaces repeated neighbor computation. Also
// emits the dual index at no extra cost.
FastBuildResult build_fast(const Hypergraph& h, const HyperedgeOrder& order);

// True iff some hyperedge outranking `source` reaches both `source` and
// `target` through walks of overlap >= s. Implemented as a partial-index
// reachability pre-filter followed by two breadth-first sweeps over the
// thresholded overlap graph, intersected on hyperedges outranking `source`.
bool is_covered_online(const Hypergraph& h, const HyperedgeOrder& order,
                       const HLIndex& partial, EdgeId source, EdgeId target,
                       std::uint32_t s);

} // namespace hlx
