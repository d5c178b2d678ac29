#pragma once

#include <cstdint>

#include "hlx/hypergraph.hpp"

namespace hlx {

// Seeded random hypergraph: m hyperedges with sizes uniform in [1, max_size];
// each member comes from the pool of previously used vertices with
// probability `bias`, otherwise uniformly from [0, n). Identical configs
// yield identical graphs on every run.
struct GenConfig {
    std::uint32_t n = 10;
    std::uint32_t m = 10;
    std::uint32_t max_size = 4;
    double bias = 0.0; // in [0, 1]
    std::uint64_t seed = 0;
};

Hypergraph generate_random(const GenConfig& cfg);

} // namespace hlx
