#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hlx/hl_index.hpp"

namespace hlx {

struct QueryResult {
    std::uint32_t value = 0;
    std::uint32_t labels_scanned = 0;
};

// Merge-scan over the two rank-sorted hub lists: cursors advance past hubs
// that cannot beat the running answer or cannot match, and meet on common
// hubs, where the answer becomes min of the two sides.
QueryResult mr_query(const HLIndex& index, VertexId u, VertexId v);

// Same merge primed with s-1, returning true at the first common hub that
// clears s on both sides.
bool s_reach_query(const HLIndex& index, VertexId u, VertexId v, std::uint32_t s);

// One batch entry: max-reachability when s == 0, s-reachability otherwise.
struct QueryTask {
    VertexId u = 0;
    VertexId v = 0;
    std::uint32_t s = 0;
};

struct BatchOutcome {
    bool failed = false;
    bool is_reach = false;      // true/false answer instead of a value
    bool reach = false;
    std::uint32_t value = 0;
    std::string error;
};

// Element-wise queries over a shared immutable index; order preserved.
// threads > 1 fans the loop out across that many execution threads; results
// are identical to the serial run. Per-task failures land in that slot
// without aborting the rest.
std::vector<BatchOutcome> batch_query(const HLIndex& index, std::span<const QueryTask> tasks,
                                      int threads = 1);

} // namespace hlx
