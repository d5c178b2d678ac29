#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hlx/hl_construct.hpp"
#include "hlx/hl_minimize.hpp"
#include "hlx/online_search.hpp"
#include "hlx/oracle.hpp"
#include "hlx/query.hpp"

#include "fixture.hpp"
#include "suite.hpp"

using namespace hlx;

namespace {

struct Engines {
    HLIndex basic, fast, minimal;
};

Engines build_all(const Hypergraph& h) {
    HyperedgeOrder order = compute_order(h);
    Engines e;
    e.basic = build_basic(h, order);
    FastBuildResult fast = build_fast(h, order);
    e.fast = fast.index;
    e.minimal = minimize(std::move(fast.index), std::move(fast.dual), order).index;
    return e;
}

// exhaustive common-hub scan, no early skips
std::uint32_t full_scan(const HLIndex& idx, VertexId u, VertexId v) {
    std::uint32_t best = 0;
    for (const Label& a : idx.labels[u])
        for (const Label& b : idx.labels[v])
            if (a.edge == b.edge) best = std::max(best, std::min(a.s, b.s));
    return best;
}

} // namespace

TEST_CASE("fixture queries across every flavor") {
    Fixture fx;
    Engines e = build_all(fx.h);
    for (const HLIndex* idx : {&e.basic, &e.fast, &e.minimal}) {
        CHECK(mr_query(*idx, fx.v(6), fx.v(9)).value == 2);
        CHECK(s_reach_query(*idx, fx.v(1), fx.v(10), 2));
        CHECK(!s_reach_query(*idx, fx.v(5), fx.v(9), 3));
        CHECK(s_reach_query(*idx, fx.v(1), fx.v(2), 1));
    }
    CHECK_THROWS_AS(mr_query(e.fast, 0, 12), ArgumentError);
    CHECK_THROWS_AS(s_reach_query(e.fast, 0, 1, 0), ArgumentError);
}

TEST_CASE("disjoint components give zero") {
    Hypergraph h = Hypergraph::from_dense(4, {{0, 1}, {2, 3}});
    Engines e = build_all(h);
    CHECK(mr_query(e.minimal, 0, 3).value == 0);
    CHECK(!s_reach_query(e.minimal, 0, 3, 1));
}

TEST_CASE("self query returns the widest incident hyperedge") {
    std::mt19937_64 rng(301);
    for (int g = 0; g < 8; ++g) {
        Hypergraph h = generate_random(random_config(rng, 20, 25, 6));
        Engines e = build_all(h);
        for (std::uint32_t u = 0; u < h.n; ++u) {
            std::uint32_t widest = 0;
            for (EdgeId ed : h.incident(u)) widest = std::max(widest, h.edge_size(ed));
            CHECK(mr_query(e.minimal, u, u).value == widest);
        }
    }
}

TEST_CASE("merge scan agrees with the exhaustive hub scan") {
    std::mt19937_64 rng(307);
    for (int g = 0; g < 12; ++g) {
        Hypergraph h = generate_random(random_config(rng, 25, 35, 6));
        Engines e = build_all(h);
        for (const HLIndex* idx : {&e.basic, &e.fast, &e.minimal})
            for (std::uint32_t u = 0; u < h.n; ++u)
                for (std::uint32_t v = u; v < h.n; ++v)
                    CHECK(mr_query(*idx, u, v).value == full_scan(*idx, u, v));
    }
}

TEST_CASE("scan length stays within both label lists") {
    std::mt19937_64 rng(311);
    Hypergraph h = generate_random(random_config(rng, 30, 40, 7));
    Engines e = build_all(h);
    for (std::uint32_t u = 0; u < h.n; ++u)
        for (std::uint32_t v = 0; v < h.n; ++v) {
            QueryResult res = mr_query(e.fast, u, v);
            CHECK(res.labels_scanned <=
                  e.fast.labels[u].size() + e.fast.labels[v].size());
        }
}

TEST_CASE("boolean query equals threshold on the max value") {
    std::mt19937_64 rng(313);
    Hypergraph h = generate_random(random_config(rng, 25, 30, 6));
    Engines e = build_all(h);
    for (std::uint32_t u = 0; u < h.n; ++u)
        for (std::uint32_t v = u; v < h.n; ++v) {
            std::uint32_t mr = mr_query(e.minimal, u, v).value;
            for (std::uint32_t s = 1; s <= mr + 2; ++s)
                CHECK(s_reach_query(e.minimal, u, v, s) == (s <= mr));
        }
}

TEST_CASE("all five engines agree everywhere") {
    std::mt19937_64 rng(317);
    for (int g = 0; g < 10; ++g) {
        Hypergraph h = generate_random(random_config(rng, 25, 35, 6));
        Engines e = build_all(h);
        ReachOracle oracle(h);
        OnlineSearch online(h);
        std::vector<std::uint32_t> expected = oracle.all_pairs();
        for (std::uint32_t u = 0; u < h.n; ++u)
            for (std::uint32_t v = u; v < h.n; ++v) {
                std::uint32_t want = expected[static_cast<std::size_t>(u) * h.n + v];
                CHECK(online.max_reach(u, v) == want);
                CHECK(mr_query(e.basic, u, v).value == want);
                CHECK(mr_query(e.fast, u, v).value == want);
                CHECK(mr_query(e.minimal, u, v).value == want);
            }
    }
}

TEST_CASE("vertex-to-vertex hub composition overshoots, the index does not") {
    Fixture fx;
    Engines e = build_all(fx.h);
    ReachOracle oracle(fx.h);
    // compose per-vertex maxima through every possible middleman
    std::uint32_t composed = 0;
    for (std::uint32_t w = 0; w < fx.h.n; ++w)
        composed = std::max(composed, std::min(oracle.max_reach(fx.v(1), w),
                                               oracle.max_reach(w, fx.v(12))));
    CHECK(composed >= 3);
    CHECK(oracle.max_reach(fx.v(1), fx.v(12)) == 2);
    CHECK(mr_query(e.basic, fx.v(1), fx.v(12)).value == 2);
    CHECK(mr_query(e.fast, fx.v(1), fx.v(12)).value == 2);
    CHECK(mr_query(e.minimal, fx.v(1), fx.v(12)).value == 2);
}

TEST_CASE("batch matches single-shot calls and keeps order") {
    Fixture fx;
    Engines e = build_all(fx.h);
    std::mt19937_64 rng(331);
    std::vector<QueryTask> tasks;
    for (int i = 0; i < 1000; ++i) {
        QueryTask t;
        t.u = static_cast<VertexId>(rng() % fx.h.n);
        t.v = static_cast<VertexId>(rng() % fx.h.n);
        t.s = (i % 3 == 0) ? 1 + static_cast<std::uint32_t>(rng() % 6) : 0;
        tasks.push_back(t);
    }
    auto serial = batch_query(e.minimal, tasks, 1);
    REQUIRE(serial.size() == tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        CHECK(!serial[i].failed);
        if (tasks[i].s == 0)
            CHECK(serial[i].value == mr_query(e.minimal, tasks[i].u, tasks[i].v).value);
        else
            CHECK(serial[i].reach == s_reach_query(e.minimal, tasks[i].u, tasks[i].v, tasks[i].s));
    }

    auto parallel = batch_query(e.minimal, tasks, 4);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(parallel[i].failed == serial[i].failed);
        CHECK(parallel[i].value == serial[i].value);
        CHECK(parallel[i].reach == serial[i].reach);
    }

    CHECK(batch_query(e.minimal, {}, 1).empty());
}

TEST_CASE("batch reports per-slot failures without aborting") {
    Fixture fx;
    Engines e = build_all(fx.h);
    std::vector<QueryTask> tasks = {
        {fx.v(6), fx.v(9), 0},
        {fx.v(1), 99, 0}, // bad id
        {fx.v(5), fx.v(9), 3},
    };
    auto out = batch_query(e.minimal, tasks, 2);
    REQUIRE(out.size() == 3);
    CHECK(!out[0].failed);
    CHECK(out[0].value == 2);
    CHECK(out[1].failed);
    CHECK(!out[1].error.empty());
    CHECK(!out[2].failed);
    CHECK(out[2].reach == false);
}
