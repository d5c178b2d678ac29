#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hlx/hl_index.hpp"

namespace hlx {

// Index image, all little-endian:
//   "HLX1"            magic
//   u32               version (1)
//   u32 n, u32 m
//   u8                flavor
//   m  x u32          importance rank per hyperedge
//   n  x u64          original vertex id table
//   n  x (u32 count, count x (u32 hyperedge, u32 s))   rank-ascending labels
//   u64               FNV-1a checksum of everything above
// Serialization is deterministic, so save/load/save is byte-identical.
struct LoadedIndex {
    HLIndex index;
    std::vector<std::uint64_t> original_ids;
};

void serialize_index(const HLIndex& index, const std::vector<std::uint64_t>& original_ids,
                     std::ostream& out);

LoadedIndex deserialize_index(std::istream& in);

} // namespace hlx
