#include "hlx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"

#include "hlx/generator.hpp"
#include "hlx/hl_construct.hpp"
#include "hlx/hl_minimize.hpp"
#include "hlx/hypergraph.hpp"
#include "hlx/online_search.hpp"
#include "hlx/oracle.hpp"
#include "hlx/order.hpp"
#include "hlx/query.hpp"
#include "hlx/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlx {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Hypergraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hypergraph(in);
}

LoadedIndex load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return deserialize_index(in);
}

bool looks_like_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    char magic[4] = {};
    in.read(magic, 4);
    return in.gcount() == 4 && magic[0] == 'H' && magic[1] == 'L' && magic[2] == 'X' &&
           magic[3] == '1';
}

std::unordered_map<std::uint64_t, VertexId> make_id_map(const std::vector<std::uint64_t>& ids) {
    std::unordered_map<std::uint64_t, VertexId> map;
    map.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) map.emplace(ids[i], static_cast<VertexId>(i));
    return map;
}

VertexId resolve(const std::unordered_map<std::uint64_t, VertexId>& map, std::uint64_t token) {
    auto it = map.find(token);
    if (it == map.end())
        throw ArgumentError("unknown vertex id " + std::to_string(token));
    return it->second;
}

void write_graph(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (std::uint32_t e = 0; e < h.m; ++e) {
        bool first = true;
        for (VertexId v : h.edge(static_cast<EdgeId>(e))) {
            if (!first) out << ' ';
            out << h.original_id[v];
            first = false;
        }
        out << '\n';
    }
}

void print_graph_stats(const GraphStats& s) {
    std::cout << "n=" << s.n << " m=" << s.m << " delta=" << s.delta << " d=" << s.d
              << " eta_max=" << s.eta_max << " eta_avg=" << s.eta_avg
              << " incidence=" << s.incidence << "\n";
}

// ---- build ----------------------------------------------------------------

int run_build(const std::string& graph_path, const std::string& out_path,
              const std::string& method, bool no_compact, bool show_stats) {
    Hypergraph h = load_graph(graph_path);
    if (!no_compact) {
        CompactResult res = compact(h);
        if (show_stats && !res.removed.empty())
            std::cout << "compacted away " << res.removed.size() << " duplicate hyperedges\n";
        h = std::move(res.graph);
    }
    HyperedgeOrder order = compute_order(h);

    HLIndex index;
    auto t0 = Clock::now();
    if (method == "basic") {
        index = build_basic(h, order);
    } else {
        FastBuildResult fast = build_fast(h, order);
        if (show_stats) {
            std::cout << "fast construction: " << fast.stats.wall_ms << " ms, labels="
                      << fast.stats.total_labels << " pushes=" << fast.stats.queue_pushes
                      << " skipped=" << fast.stats.sources_skipped
                      << " nbr-peak=" << fast.stats.neighbor_peak_total << "\n";
        }
        if (method == "minimal") {
            MinimizeResult min = minimize(std::move(fast.index), std::move(fast.dual), order);
            if (show_stats)
                std::cout << "minimize: removed " << min.stats.removed << " of "
                          << min.stats.examined << " labels\n";
            index = std::move(min.index);
        } else {
            index = std::move(fast.index);
        }
    }
    double build_ms = ms_since(t0);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    serialize_index(index, h.original_id, out);

    if (show_stats) {
        print_graph_stats(compute_stats(h));
        std::cout << "method=" << method << " build=" << build_ms << " ms, total labels="
                  << index.total_labels() << "\n";
    }
    return 0;
}

// ---- query / batch ---------------------------------------------------------

int run_query(const std::string& index_path, std::uint64_t u_tok, std::uint64_t v_tok,
              std::uint32_t s) {
    LoadedIndex loaded = load_index(index_path);
    auto ids = make_id_map(loaded.original_ids);
    VertexId u = resolve(ids, u_tok);
    VertexId v = resolve(ids, v_tok);
    if (s == 0)
        std::cout << mr_query(loaded.index, u, v).value << "\n";
    else
        std::cout << (s_reach_query(loaded.index, u, v, s) ? "true" : "false") << "\n";
    return 0;
}

int run_batch(const std::string& index_path, const std::string& pairs_path,
              const std::string& out_path, int threads) {
    LoadedIndex loaded = load_index(index_path);
    auto ids = make_id_map(loaded.original_ids);

    std::ifstream in(pairs_path);
    if (!in) throw std::runtime_error("cannot open " + pairs_path);
    std::vector<QueryTask> tasks;
    std::vector<std::string> bad; // pre-resolution failures, per line
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::uint64_t a, b;
        std::uint64_t s = 0;
        if (!(ss >> a >> b)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' or 'u v s'");
        }
        ss >> s;
        QueryTask task;
        std::string err;
        try {
            task.u = resolve(ids, a);
            task.v = resolve(ids, b);
            task.s = static_cast<std::uint32_t>(s);
        } catch (const std::exception& e) {
            err = e.what();
        }
        tasks.push_back(task);
        bad.push_back(err);
    }

    std::vector<BatchOutcome> results = batch_query(loaded.index, tasks, threads);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
        out = &file;
    }
    bool any_failed = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!bad[i].empty()) {
            *out << "error: " << bad[i] << "\n";
            any_failed = true;
        } else if (results[i].failed) {
            *out << "error: " << results[i].error << "\n";
            any_failed = true;
        } else if (results[i].is_reach) {
            *out << (results[i].reach ? "true" : "false") << "\n";
        } else {
            *out << results[i].value << "\n";
        }
    }
    return any_failed ? 1 : 0;
}

// ---- gen --------------------------------------------------------------------

int run_gen(const GenConfig& cfg, const std::string& out_path) {
    Hypergraph h = generate_random(cfg);
    write_graph(h, out_path);
    std::cout << "wrote " << out_path << ": ";
    print_graph_stats(compute_stats(h));
    return 0;
}

// ---- stats ------------------------------------------------------------------

int run_stats(const std::string& path) {
    if (looks_like_index(path)) {
        LoadedIndex loaded = load_index(path);
        const HLIndex& idx = loaded.index;
        std::uint64_t total = idx.total_labels();
        std::size_t widest = 0;
        for (const auto& l : idx.labels) widest = std::max(widest, l.size());
        const char* flavor = idx.flavor == IndexFlavor::Basic ? "basic"
                             : idx.flavor == IndexFlavor::Fast ? "fast"
                                                               : "minimal";
        std::cout << "index: n=" << idx.n << " m=" << idx.m << " flavor=" << flavor
                  << " labels=" << total
                  << " avg=" << (idx.n ? static_cast<double>(total) / idx.n : 0.0)
                  << " max=" << widest << "\n";
    } else {
        print_graph_stats(compute_stats(load_graph(path)));
    }
    return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(std::uint32_t graphs, std::uint32_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GenConfig> cfgs;
    const double biases[] = {0.0, 0.3, 0.6, 0.9};
    for (std::uint32_t g = 0; g < graphs; ++g) {
        GenConfig cfg;
        cfg.n = 5 + static_cast<std::uint32_t>(rng() % (max_n - 4));
        cfg.m = 5 + static_cast<std::uint32_t>(rng() % (2 * max_n));
        cfg.max_size = 2 + static_cast<std::uint32_t>(rng() % 7);
        if (cfg.max_size > cfg.n) cfg.max_size = cfg.n;
        cfg.bias = biases[rng() % 4];
        cfg.seed = rng();
        cfgs.push_back(cfg);
    }

    std::uint64_t mismatches = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : mismatches)
    for (std::int64_t g = 0; g < static_cast<std::int64_t>(cfgs.size()); ++g) {
        Hypergraph h = generate_random(cfgs[g]);
        HyperedgeOrder order = compute_order(h);
        ReachOracle oracle(h);
        std::vector<std::uint32_t> expected = oracle.all_pairs();

        HLIndex basic = build_basic(h, order);
        FastBuildResult fast = build_fast(h, order);
        HLIndex fast_index = fast.index;
        MinimizeResult minimal = minimize(std::move(fast.index), std::move(fast.dual), order);
        OnlineSearch online(h);

        std::uint64_t local = 0;
        for (std::uint32_t u = 0; u < h.n; ++u) {
            for (std::uint32_t v = u; v < h.n; ++v) {
                std::uint32_t want = expected[static_cast<std::size_t>(u) * h.n + v];
                if (online.max_reach(u, v) != want) ++local;
                if (mr_query(basic, u, v).value != want) ++local;
                if (mr_query(fast_index, u, v).value != want) ++local;
                if (mr_query(minimal.index, u, v).value != want) ++local;
            }
        }
        if (local) {
#pragma omp critical
            std::cerr << "graph " << g << " (seed " << cfgs[g].seed << "): " << local
                      << " mismatching answers\n";
        }
        mismatches += local;
    }
    std::cout << "verified " << graphs << " graphs, " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

// ---- bench ------------------------------------------------------------------

struct LatencyStats {
    double mean_us = 0, p50_us = 0, p95_us = 0, max_us = 0;
};

LatencyStats summarize(std::vector<double>& us) {
    LatencyStats s;
    if (us.empty()) return s;
    std::sort(us.begin(), us.end());
    double total = 0;
    for (double v : us) total += v;
    s.mean_us = total / us.size();
    s.p50_us = us[us.size() / 2];
    s.p95_us = us[static_cast<std::size_t>(us.size() * 0.95)];
    s.max_us = us.back();
    return s;
}

int run_bench(const std::string& graph_path, std::uint32_t queries, std::uint64_t seed,
              const std::string& methods_csv, int threads) {
    Hypergraph h = load_graph(graph_path);
    h = compact(h).graph;
    GraphStats gs = compute_stats(h);
    std::cout << "graph: ";
    print_graph_stats(gs);

    HyperedgeOrder order = compute_order(h);
    FastBuildResult fast = build_fast(h, order);
    std::cout << "construct fast:    " << fast.stats.wall_ms << " ms, labels="
              << fast.stats.total_labels << ", queue pushes=" << fast.stats.queue_pushes
              << ", nbr-index peak=" << fast.stats.neighbor_peak_total << " entries\n";

    HLIndex fast_index = fast.index;
    auto t0 = Clock::now();
    MinimizeResult minimal = minimize(std::move(fast.index), std::move(fast.dual), order);
    std::cout << "construct minimal: +" << ms_since(t0) << " ms, labels="
              << minimal.index.total_labels() << " (removed " << minimal.stats.removed
              << ")\n";
    auto image_bytes = [&](const HLIndex& idx) {
        std::ostringstream os(std::ios::binary);
        serialize_index(idx, h.original_id, os);
        return os.str().size();
    };
    std::cout << "index size: fast " << image_bytes(fast_index) << " bytes, minimal "
              << image_bytes(minimal.index) << " bytes\n";

    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) methods.push_back(tok);
    }

    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs(queries);
    for (auto& p : pairs)
        p = {static_cast<VertexId>(rng() % h.n), static_cast<VertexId>(rng() % h.n)};

    std::vector<std::vector<std::uint32_t>> answers;
    double online_mean = 0;
    for (const std::string& method : methods) {
        std::vector<std::uint32_t> values(pairs.size());
        std::vector<double> us(pairs.size());
        std::uint64_t pops = 0, scans = 0;
        if (method == "online" || method == "online-pre") {
            SearchConfig cfg;
            cfg.early_global_cutoff = true;
            cfg.neighbor_mode = method == "online-pre" ? NeighborMode::Precomputed
                                                       : NeighborMode::OnTheFly;
            OnlineSearch search(h, cfg);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto q0 = Clock::now();
                values[i] = search.max_reach(pairs[i].first, pairs[i].second);
                us[i] = ms_since(q0) * 1000.0;
            }
            pops = search.pops();
            scans = search.neighbor_scans();
        } else if (method == "index" || method == "min-index") {
            const HLIndex& idx = method == "index" ? fast_index : minimal.index;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto q0 = Clock::now();
                values[i] = mr_query(idx, pairs[i].first, pairs[i].second).value;
                us[i] = ms_since(q0) * 1000.0;
            }
        } else {
            throw ArgumentError("unknown bench method: " + method);
        }
        LatencyStats ls = summarize(us);
        if (method == "online") online_mean = ls.mean_us;
        char line[160];
        std::snprintf(line, sizeof line, "%-10s mean %10.3f us  p50 %10.3f  p95 %10.3f  max %10.3f",
                      method.c_str(), ls.mean_us, ls.p50_us, ls.p95_us, ls.max_us);
        std::cout << line;
        if (online_mean > 0 && ls.mean_us > 0) {
            std::snprintf(line, sizeof line, "  (%.0fx vs online)", online_mean / ls.mean_us);
            std::cout << line;
        }
        if (pops > 0) {
            std::snprintf(line, sizeof line, "  [%.0f pops, %.0f scans /query]",
                          static_cast<double>(pops) / pairs.size(),
                          static_cast<double>(scans) / pairs.size());
            std::cout << line;
        }
        std::cout << "\n";
        answers.push_back(std::move(values));
    }
    for (std::size_t i = 1; i < answers.size(); ++i) {
        if (answers[i] != answers[0]) {
            std::cerr << "engines disagree on query values\n";
            return 1;
        }
    }

    // batch throughput, serial vs fanned out; tile the pair set so the
    // comparison is not dominated by thread startup
    const std::size_t batch_size = std::max<std::size_t>(pairs.size(), 1000000);
    std::vector<QueryTask> tasks(batch_size);
    for (std::size_t i = 0; i < batch_size; ++i) {
        const auto& p = pairs[i % pairs.size()];
        tasks[i] = {p.first, p.second, 0};
    }
    auto throughput = [&](int t) {
        auto b0 = Clock::now();
        auto res = batch_query(minimal.index, tasks, t);
        double secs = ms_since(b0) / 1000.0;
        (void)res;
        return secs > 0 ? tasks.size() / secs / 1e6 : 0.0;
    };
    double serial = throughput(1);
    double parallel = throughput(threads);
    char line[120];
    std::snprintf(line, sizeof line, "batch (min-index): serial %.2f Mq/s, %d threads %.2f Mq/s\n",
                  serial, threads, parallel);
    std::cout << line;
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"hypergraph max-reachability toolkit"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct an index from a graph file");
    std::string graph_path, out_path, method = "fast";
    bool no_compact = false, show_stats = false;
    build->add_option("graph", graph_path)->required();
    build->add_option("-o,--output", out_path)->required();
    build->add_option("--method", method)->check(CLI::IsMember({"basic", "fast", "minimal"}));
    build->add_flag("--no-compact", no_compact);
    build->add_flag("--stats", show_stats);

    // query
    auto* query = app.add_subcommand("query", "answer one reachability query");
    std::string q_index;
    std::uint64_t q_u = 0, q_v = 0;
    std::uint32_t q_s = 0;
    query->add_option("index", q_index)->required();
    query->add_option("u", q_u)->required();
    query->add_option("v", q_v)->required();
    query->add_option("--s", q_s);

    // batch
    auto* batch = app.add_subcommand("batch", "answer queries from a pairs file");
    std::string b_index, b_pairs, b_out;
    int b_threads = 1;
    batch->add_option("index", b_index)->required();
    batch->add_option("pairs", b_pairs)->required();
    batch->add_option("-o,--output", b_out);
    batch->add_option("--threads", b_threads)->check(CLI::PositiveNumber);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random hypergraph");
    GenConfig cfg;
    std::string g_out;
    gen->add_option("--n", cfg.n);
    gen->add_option("--m", cfg.m);
    gen->add_option("--max-size", cfg.max_size);
    gen->add_option("--bias", cfg.bias);
    gen->add_option("--seed", cfg.seed);
    gen->add_option("-o,--output", g_out)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "compare engines on one graph");
    std::string be_graph, be_methods = "online,online-pre,index";
    std::uint32_t be_queries = 1000;
    std::uint64_t be_seed = 1;
    int be_threads = 4;
    bench->add_option("graph", be_graph)->required();
    bench->add_option("--queries", be_queries);
    bench->add_option("--seed", be_seed);
    bench->add_option("--methods", be_methods);
    bench->add_option("--threads", be_threads)->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "randomized cross-engine agreement suite");
    std::uint32_t v_graphs = 200, v_max_n = 60;
    std::uint64_t v_seed = 1;
    verify->add_option("--graphs", v_graphs);
    verify->add_option("--max-n", v_max_n)->check(CLI::Range(5u, 1000u));
    verify->add_option("--seed", v_seed);

    // stats
    auto* stats = app.add_subcommand("stats", "print graph or index statistics");
    std::string s_path;
    stats->add_option("path", s_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build->parsed()) return run_build(graph_path, out_path, method, no_compact, show_stats);
        if (query->parsed()) return run_query(q_index, q_u, q_v, q_s);
        if (batch->parsed()) return run_batch(b_index, b_pairs, b_out, b_threads);
        if (gen->parsed()) return run_gen(cfg, g_out);
        if (bench->parsed()) return run_bench(be_graph, be_queries, be_seed, be_methods, be_threads);
        if (verify->parsed()) return run_verify(v_graphs, v_max_n, v_seed);
        if (stats->parsed()) return run_stats(s_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hlx
