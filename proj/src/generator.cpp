#include "hlx/generator.hpp"

#include <algorithm>
#include <random>

namespace hlx {

namespace {

// distribution results are implementation-defined; keep draws raw so the
// same seed gives the same graph under any standard library
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

bool chance(std::mt19937_64& rng, double p) {
    return (rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace

Hypergraph generate_random(const GenConfig& cfg) {
    if (cfg.n < 1 || cfg.m < 1) throw ArgumentError("need at least one vertex and hyperedge");
    if (cfg.max_size < 1) throw ArgumentError("max_size must be positive");
    if (cfg.max_size > cfg.n) throw ArgumentError("max_size exceeds vertex count");
    if (cfg.bias < 0.0 || cfg.bias > 1.0) throw ArgumentError("bias must be in [0, 1]");

    std::mt19937_64 rng(cfg.seed);
    std::vector<std::uint64_t> pool;
    std::vector<std::uint8_t> pooled(cfg.n, 0);
    std::vector<std::vector<std::uint64_t>> edges(cfg.m);

    for (std::uint32_t e = 0; e < cfg.m; ++e) {
        std::uint32_t size = 1 + static_cast<std::uint32_t>(below(rng, cfg.max_size));
        auto& members = edges[e];
        for (std::uint32_t i = 0; i < size; ++i) {
            std::uint64_t v;
            if (!pool.empty() && chance(rng, cfg.bias))
                v = pool[below(rng, pool.size())];
            else
                v = below(rng, cfg.n);
            members.push_back(v);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::uint64_t v : members) {
            if (!pooled[v]) {
                pooled[v] = 1;
                pool.push_back(v);
            }
        }
    }
    return Hypergraph::from_tokens(edges);
}

} // namespace hlx
