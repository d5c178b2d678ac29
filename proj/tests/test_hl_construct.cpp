#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hlx/hl_construct.hpp"
#include "hlx/oracle.hpp"
#include "hlx/query.hpp"

#include "fixture.hpp"
#include "suite.hpp"

using namespace hlx;

namespace {

// labels as (hub, s) pairs keyed by the fixture's own numbering
std::vector<std::pair<unsigned, std::uint32_t>> hub_list(const Fixture& fx, const HLIndex& idx,
                                                         unsigned token) {
    std::vector<std::pair<unsigned, std::uint32_t>> out;
    for (const Label& l : idx.labels[fx.v(token)])
        out.emplace_back(static_cast<unsigned>(l.edge) + 1, l.s);
    return out;
}

void check_fixture_index(const Fixture& fx, const HLIndex& idx) {
    using L = std::vector<std::pair<unsigned, std::uint32_t>>;
    // hub order follows importance: e2, e4, e7, e3, e5, e6, e1
    CHECK(hub_list(fx, idx, 1) == L{{2, 2}, {7, 3}, {1, 2}});
    CHECK(hub_list(fx, idx, 2) == L{{2, 1}, {1, 2}});
    CHECK(hub_list(fx, idx, 3) == L{{2, 6}, {4, 4}, {7, 3}});
    CHECK(hub_list(fx, idx, 4) == L{{2, 6}, {4, 4}, {7, 3}});
    CHECK(hub_list(fx, idx, 5) == L{{2, 6}, {5, 3}});
    CHECK(hub_list(fx, idx, 6) == L{{2, 6}, {5, 3}});
    CHECK(hub_list(fx, idx, 7) == L{{2, 6}, {6, 3}});
    CHECK(hub_list(fx, idx, 8) == L{{2, 6}, {6, 3}});
    CHECK(hub_list(fx, idx, 9) == L{{2, 2}, {3, 3}, {6, 3}});
    CHECK(hub_list(fx, idx, 10) == L{{2, 2}, {3, 3}, {5, 3}});
    CHECK(hub_list(fx, idx, 11) == L{{2, 2}, {4, 4}});
    CHECK(hub_list(fx, idx, 12) == L{{2, 2}, {4, 4}, {3, 3}});
    CHECK(idx.total_labels() == 30);
}

void check_all_pairs_against_oracle(const Hypergraph& h, const HLIndex& idx) {
    ReachOracle oracle(h);
    std::vector<std::uint32_t> expected = oracle.all_pairs();
    for (std::uint32_t u = 0; u < h.n; ++u)
        for (std::uint32_t v = u; v < h.n; ++v)
            CHECK(mr_query(idx, u, v).value ==
                  expected[static_cast<std::size_t>(u) * h.n + v]);
}

} // namespace

TEST_CASE("basic construction reproduces the expected fixture index") {
    Fixture fx;
    HyperedgeOrder order = compute_order(fx.h);
    HLIndex idx = build_basic(fx.h, order);
    check_fixture_index(fx, idx);
    check_all_pairs_against_oracle(fx.h, idx);
}

TEST_CASE("fast construction reproduces the expected fixture index") {
    Fixture fx;
    HyperedgeOrder order = compute_order(fx.h);
    FastBuildResult res = build_fast(fx.h, order);
    check_fixture_index(fx, res.index);
    check_all_pairs_against_oracle(fx.h, res.index);
    CHECK(res.stats.total_labels == 30);
    CHECK(res.index.flavor == IndexFlavor::Fast);
}

TEST_CASE("single hyperedge labels every member once") {
    Hypergraph h = Hypergraph::from_dense(2, {{0, 1}});
    HyperedgeOrder order = compute_order(h);
    HLIndex basic = build_basic(h, order);
    CHECK(basic.labels[0] == std::vector<Label>{{0, 2}});
    CHECK(basic.labels[1] == std::vector<Label>{{0, 2}});

    FastBuildResult fast = build_fast(h, order);
    CHECK(fast.dual.entries[0] ==
          std::vector<std::pair<VertexId, std::uint32_t>>{{0, 2}, {1, 2}});
}

TEST_CASE("cover detection on the fixture") {
    Fixture fx;
    HyperedgeOrder order = compute_order(fx.h);
    HLIndex empty;
    empty.n = fx.h.n;
    empty.m = fx.h.m;
    empty.labels.resize(fx.h.n);
    empty.rank = order.rank;

    // the most important hyperedge can never be covered
    CHECK(!is_covered_online(fx.h, order, empty, fx.e(2), fx.e(5), 2));
    // no walk exists above either endpoint's size
    CHECK(!is_covered_online(fx.h, order, empty, fx.e(4), fx.e(3), 5));

    // e2 outranks e4 and reaches both e4 and e6 with overlap 2, so the
    // e4~e6 relation at overlap 2 is covered
    FastBuildResult partial = build_fast(fx.h, order);
    CHECK(is_covered_online(fx.h, order, partial.index, fx.e(4), fx.e(6), 2));
    CHECK(!is_covered_online(fx.h, order, partial.index, fx.e(4), fx.e(3), 3));
}

TEST_CASE("cover-degree bounds trace the sub-hypergraph example") {
    // e1={1,2}, e2={3..8}, e4={3,4,11,12}, e7={1,3,4} under an injected order
    std::istringstream in("1 2\n3 4 5 6 7 8\n3 4 11 12\n1 3 4\n");
    Hypergraph h = parse_hypergraph(in);
    const EdgeId e1 = 0, e2 = 1, e4 = 2, e7 = 3;
    HyperedgeOrder order;
    order.rank = {3, 0, 1, 2}; // e2 < e4 < e7 < e1
    order.by_rank = {e2, e4, e7, e1};
    order.weight.assign(4, 0);

    FastBuildResult res = build_fast(h, order);
    CHECK(res.stats.mcd_at_epoch[e2] == 0);
    CHECK(res.stats.mcd_at_epoch[e4] == 2);
    CHECK(res.stats.mcd_at_epoch[e7] == 2);
    CHECK(res.stats.mcd_at_epoch[e1] == 1);

    // the walk from e4 onward to e7 is pruned: v1 gets no e4 hub
    VertexId v1 = 0; // token 1 appears first
    REQUIRE(h.original_id[v1] == 1);
    for (const Label& l : res.index.labels[v1]) CHECK(l.edge != e4);
    // members of e4 by dense id: tokens 3, 4, 11, 12
    CHECK(res.dual.entries[e4] ==
          std::vector<std::pair<VertexId, std::uint32_t>>{{2, 4}, {3, 4}, {8, 4}, {9, 4}});

    check_all_pairs_against_oracle(h, res.index);

    // recorded bounds equal the brute-force cover degree at each epoch
    for (EdgeId e = 0; e < 4; ++e)
        CHECK(res.stats.mcd_at_epoch[e] == mcd_bruteforce(h, order, e));
}

TEST_CASE("brute-force cover degree basics") {
    Fixture fx;
    HyperedgeOrder order = compute_order(fx.h);
    CHECK(mcd_bruteforce(fx.h, order, fx.e(2)) == 0); // nothing outranks it
    FastBuildResult res = build_fast(fx.h, order);
    for (std::uint32_t e = 0; e < fx.h.m; ++e)
        CHECK(res.stats.mcd_at_epoch[e] == mcd_bruteforce(fx.h, order, e));
}

TEST_CASE("both constructions answer like the reference on random graphs") {
    std::mt19937_64 rng(101);
    for (int g = 0; g < 25; ++g) {
        Hypergraph h = generate_random(random_config(rng, 30, 40, 7));
        HyperedgeOrder order = compute_order(h);
        HLIndex basic = build_basic(h, order);
        FastBuildResult fast = build_fast(h, order);

        ReachOracle oracle(h);
        std::vector<std::uint32_t> expected = oracle.all_pairs();
        for (std::uint32_t u = 0; u < h.n; ++u)
            for (std::uint32_t v = u; v < h.n; ++v) {
                std::uint32_t want = expected[static_cast<std::size_t>(u) * h.n + v];
                CHECK(mr_query(basic, u, v).value == want);
                CHECK(mr_query(fast.index, u, v).value == want);
            }
    }
}

TEST_CASE("every stored label is the exact vertex-to-hub reach") {
    std::mt19937_64 rng(103);
    for (int g = 0; g < 12; ++g) {
        Hypergraph h = generate_random(random_config(rng, 20, 25, 6));
        HyperedgeOrder order = compute_order(h);
        FastBuildResult fast = build_fast(h, order);
        HLIndex basic = build_basic(h, order);
        ReachOracle oracle(h);
        for (const HLIndex* idx : {&fast.index, &basic}) {
            for (std::uint32_t u = 0; u < h.n; ++u)
                for (const Label& l : idx->labels[u])
                    CHECK(oracle.vertex_to_edge(u, l.edge) == l.s);
        }
    }
}

TEST_CASE("fast labels carry no covered tuple on tiny graphs") {
    std::mt19937_64 rng(107);
    for (int g = 0; g < 20; ++g) {
        GenConfig cfg = random_config(rng, 15, 20, 5);
        cfg.n = std::min<std::uint32_t>(cfg.n, 15);
        cfg.max_size = std::min(cfg.max_size, cfg.n);
        Hypergraph h = generate_random(cfg);
        HyperedgeOrder order = compute_order(h);
        FastBuildResult fast = build_fast(h, order);
        ReachOracle oracle(h);
        std::vector<std::uint32_t> bottleneck = oracle.edge_bottlenecks();

        for (std::uint32_t u = 0; u < h.n; ++u) {
            for (const Label& l : fast.index.labels[u]) {
                for (std::uint32_t w = 0; w < h.m; ++w) {
                    if (order.rank[w] >= order.rank[l.edge]) continue;
                    bool covers = oracle.vertex_to_edge(u, w) >= l.s &&
                                  bottleneck[static_cast<std::size_t>(w) * h.m + l.edge] >= l.s;
                    CHECK(!covers);
                }
            }
        }
    }
}

TEST_CASE("cover-degree bounds are exact at every epoch") {
    std::mt19937_64 rng(109);
    for (int g = 0; g < 15; ++g) {
        Hypergraph h = generate_random(random_config(rng, 25, 30, 6));
        HyperedgeOrder order = compute_order(h);
        FastBuildResult fast = build_fast(h, order);
        for (std::uint32_t e = 0; e < h.m; ++e)
            CHECK(fast.stats.mcd_at_epoch[e] == mcd_bruteforce(h, order, e));
    }
}

TEST_CASE("label lists are rank-sorted with distinct hubs, totals consistent") {
    std::mt19937_64 rng(113);
    for (int g = 0; g < 15; ++g) {
        Hypergraph h = generate_random(random_config(rng, 30, 40, 7));
        HyperedgeOrder order = compute_order(h);
        FastBuildResult fast = build_fast(h, order);

        for (std::uint32_t u = 0; u < h.n; ++u) {
            const auto& lu = fast.index.labels[u];
            for (std::size_t i = 1; i < lu.size(); ++i)
                CHECK(order.rank[lu[i - 1].edge] < order.rank[lu[i].edge]);
        }
        CHECK(fast.index.total_labels() == fast.dual.total_entries());
        CHECK(fast.index.total_labels() == fast.stats.total_labels);
        for (std::uint32_t e = 0; e < h.m; ++e) {
            const auto& de = fast.dual.entries[e];
            for (std::size_t i = 1; i < de.size(); ++i)
                CHECK(de[i - 1].second >= de[i].second);
        }
    }
}

TEST_CASE("neighbor index stays within the full adjacency budget") {
    std::mt19937_64 rng(127);
    for (int g = 0; g < 15; ++g) {
        Hypergraph h = generate_random(random_config(rng, 30, 50, 7));
        HyperedgeOrder order = compute_order(h);
        FastBuildResult fast = build_fast(h, order);
        std::uint64_t full = 0;
        for (std::uint32_t e = 0; e < h.m; ++e) full += neighbors(h, e).size();
        CHECK(fast.stats.neighbor_peak_total <= full);
        CHECK(fast.stats.neighbor_insertions <= full);
    }
}
