#pragma once

#include <cstdint>
#include <vector>

#include "hlx/hypergraph.hpp"

namespace hlx {

enum class IndexFlavor : std::uint8_t { Basic = 0, Fast = 1, Minimal = 2 };

// One hub entry: vertex s-reaches hyperedge `edge` with exactly this s.
struct Label {
    EdgeId edge;
    std::uint32_t s;
    bool operator==(const Label&) const = default;
};

// Per-vertex hub lists plus the importance ranks they are sorted by.
// Each list is strictly ascending in rank (most important hub first) and
// holds at most one entry per hyperedge. Immutable once built; queries from
// any number of threads are safe.
struct HLIndex {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    IndexFlavor flavor = IndexFlavor::Basic;
    std::vector<std::vector<Label>> labels; // n lists
    std::vector<std::uint32_t> rank;        // m, importance rank per hyperedge

    std::uint64_t total_labels() const {
        std::uint64_t total = 0;
        for (const auto& l : labels) total += l.size();
        return total;
    }
};

// Transpose of the label index: for each hyperedge, the vertices that reach
// it with their s values, non-ascending in s.
struct DualIndex {
    std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> entries;

    std::uint64_t total_entries() const {
        std::uint64_t total = 0;
        for (const auto& d : entries) total += d.size();
        return total;
    }
};

} // namespace hlx
