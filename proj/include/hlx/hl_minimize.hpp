#pragma once

#include <cstdint>
#include <vector>

#include "hlx/hl_index.hpp"
#include "hlx/order.hpp"

namespace hlx {

struct MinimizeStats {
    std::uint64_t examined = 0;
    std::uint64_t removed = 0;
    std::uint32_t theta = 0;  // largest dual list
    std::uint32_t beta = 0;   // largest inverted support list
    std::uint32_t lv_max = 0; // largest per-vertex label list
};

struct MinimizeResult {
    HLIndex index;
    MinimizeStats stats;
};

// Removes every label whose pair reachabilities are fully explained by other
// hubs, leaving an index that is still complete and in which every remaining
// label is load-bearing for at least one query. Hubs are processed by
// importance; per hub, candidates go in non-ascending s so the support test
// of one candidate settles later ones. Consumes the index/dual pair from the
// fast builder; throws IntegrityError when the two disagree.
MinimizeResult minimize(HLIndex index, DualIndex dual, const HyperedgeOrder& order);

struct CompletenessReport {
    struct Item {
        VertexId u, v;
        std::uint32_t got, expected;
    };
    std::vector<Item> mismatches;
    bool ok() const { return mismatches.empty(); }
};

struct NecessityReport {
    struct Item {
        VertexId u;
        Label label;
    };
    std::vector<Item> redundant;
    bool ok() const { return redundant.empty(); }
};

// All-pairs comparison of index answers against the brute-force reference.
// Intended for graphs small enough to enumerate every pair.
CompletenessReport verify_completeness(const HLIndex& index, const Hypergraph& h);

// Simulates removal of each label in turn; reports labels whose removal
// leaves every query answer intact. Empty for a minimal index.
NecessityReport verify_necessity(const HLIndex& index, const Hypergraph& h);

} // namespace hlx
