#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "hlx/hl_construct.hpp"
#include "hlx/hl_minimize.hpp"
#include "hlx/query.hpp"
#include "hlx/serialize.hpp"

#include "fixture.hpp"
#include "suite.hpp"

using namespace hlx;

namespace {

std::string to_bytes(const HLIndex& idx, const std::vector<std::uint64_t>& ids) {
    std::ostringstream out(std::ios::binary);
    serialize_index(idx, ids, out);
    return out.str();
}

LoadedIndex from_bytes(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return deserialize_index(in);
}

HLIndex fixture_minimal(const Fixture& fx) {
    HyperedgeOrder order = compute_order(fx.h);
    FastBuildResult fast = build_fast(fx.h, order);
    return minimize(std::move(fast.index), std::move(fast.dual), order).index;
}

} // namespace

TEST_CASE("round trip is structurally identical and byte-stable") {
    Fixture fx;
    HLIndex idx = fixture_minimal(fx);
    std::string bytes = to_bytes(idx, fx.h.original_id);
    LoadedIndex loaded = from_bytes(bytes);

    CHECK(loaded.index.n == idx.n);
    CHECK(loaded.index.m == idx.m);
    CHECK(loaded.index.flavor == idx.flavor);
    CHECK(loaded.index.rank == idx.rank);
    CHECK(loaded.index.labels == idx.labels);
    CHECK(loaded.original_ids == fx.h.original_id);

    CHECK(to_bytes(loaded.index, loaded.original_ids) == bytes);
}

TEST_CASE("every corrupted byte is caught") {
    Fixture fx;
    HLIndex idx = fixture_minimal(fx);
    std::string bytes = to_bytes(idx, fx.h.original_id);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::string bad = bytes;
        std::size_t pos = rng() % bad.size();
        bad[pos] = static_cast<char>(bad[pos] ^ 0x20);
        CHECK_THROWS_AS(from_bytes(bad), FormatError);
    }
}

TEST_CASE("truncation and bad headers are format errors") {
    Fixture fx;
    HLIndex idx = fixture_minimal(fx);
    std::string bytes = to_bytes(idx, fx.h.original_id);

    CHECK_THROWS_AS(from_bytes(bytes.substr(0, bytes.size() / 2)), FormatError);
    CHECK_THROWS_AS(from_bytes(std::string("HLX1")), FormatError);
    CHECK_THROWS_AS(from_bytes(std::string(64, '\0')), FormatError);

    std::string wrong_magic = bytes;
    wrong_magic[0] = 'X';
    CHECK_THROWS_AS(from_bytes(wrong_magic), FormatError);
}

TEST_CASE("queries after reload match queries before save") {
    std::mt19937_64 rng(41);
    Hypergraph h = generate_random(random_config(rng, 40, 60, 7));
    HyperedgeOrder order = compute_order(h);
    FastBuildResult fast = build_fast(h, order);
    MinimizeResult min = minimize(std::move(fast.index), std::move(fast.dual), order);

    LoadedIndex loaded = from_bytes(to_bytes(min.index, h.original_id));
    for (int q = 0; q < 1000; ++q) {
        VertexId u = static_cast<VertexId>(rng() % h.n);
        VertexId v = static_cast<VertexId>(rng() % h.n);
        CHECK(mr_query(loaded.index, u, v).value == mr_query(min.index, u, v).value);
    }
}
