#include "hlx/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <string>
#include <unordered_map>

namespace hlx {

namespace {

Hypergraph assemble(std::uint32_t n,
                    const std::vector<std::vector<VertexId>>& edges,
                    std::vector<std::uint64_t> original_id) {
    Hypergraph h;
    h.n = n;
    h.m = static_cast<std::uint32_t>(edges.size());
    h.original_id = std::move(original_id);

    h.edge_off.assign(h.m + 1, 0);
    std::uint64_t total = 0;
    for (std::uint32_t e = 0; e < h.m; ++e) {
        total += edges[e].size();
        h.edge_off[e + 1] = total;
    }
    h.edge_vtx.reserve(total);
    for (const auto& ev : edges)
        h.edge_vtx.insert(h.edge_vtx.end(), ev.begin(), ev.end());

    // transpose; iterating edges in id order keeps each incidence list sorted
    h.vtx_off.assign(h.n + 1, 0);
    for (VertexId v : h.edge_vtx) h.vtx_off[v + 1]++;
    for (std::uint32_t v = 0; v < h.n; ++v) h.vtx_off[v + 1] += h.vtx_off[v];
    h.vtx_edge.resize(total);
    std::vector<std::uint64_t> cursor(h.vtx_off.begin(), h.vtx_off.end() - 1);
    for (std::uint32_t e = 0; e < h.m; ++e)
        for (VertexId v : h.edge(static_cast<EdgeId>(e)))
            h.vtx_edge[cursor[v]++] = static_cast<EdgeId>(e);
    return h;
}

} // namespace

Hypergraph Hypergraph::from_tokens(const std::vector<std::vector<std::uint64_t>>& edges) {
    std::unordered_map<std::uint64_t, VertexId> remap;
    std::vector<std::uint64_t> original;
    std::vector<std::vector<VertexId>> dense(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].empty()) throw ArgumentError("empty hyperedge");
        auto& out = dense[e];
        out.reserve(edges[e].size());
        for (std::uint64_t tok : edges[e]) {
            auto [it, fresh] = remap.try_emplace(tok, static_cast<VertexId>(original.size()));
            if (fresh) original.push_back(tok);
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    const std::uint32_t n = static_cast<std::uint32_t>(original.size());
    return assemble(n, dense, std::move(original));
}

Hypergraph Hypergraph::from_dense(std::uint32_t n, std::vector<std::vector<VertexId>> edges) {
    for (auto& ev : edges) {
        if (ev.empty()) throw ArgumentError("empty hyperedge");
        std::sort(ev.begin(), ev.end());
        ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
        if (ev.back() >= n) throw ArgumentError("vertex id out of range in edge list");
    }
    std::vector<std::uint64_t> original(n);
    std::iota(original.begin(), original.end(), 0);
    return assemble(n, edges, std::move(original));
}

Hypergraph parse_hypergraph(std::istream& in) {
    std::vector<std::vector<std::uint64_t>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::vector<std::uint64_t> toks;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            if (*p == ' ' || *p == '\t' || *p == ',') { ++p; continue; }
            std::uint64_t value = 0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc() ||
                (next < end && *next != ' ' && *next != '\t' && *next != ',')) {
                throw ParseError("line " + std::to_string(lineno) + ": malformed vertex token");
            }
            toks.push_back(value);
            p = next;
        }
        if (toks.empty())
            throw ParseError("line " + std::to_string(lineno) + ": no vertices");
        edges.push_back(std::move(toks));
    }
    return Hypergraph::from_tokens(edges);
}

CompactResult compact(const Hypergraph& h) {
    std::vector<EdgeId> ids(h.m);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
        auto ea = h.edge(a), eb = h.edge(b);
        if (auto c = std::lexicographical_compare_three_way(ea.begin(), ea.end(),
                                                            eb.begin(), eb.end());
            c != 0)
            return c < 0;
        return a < b;
    });

    std::vector<std::pair<EdgeId, EdgeId>> removed;
    std::vector<bool> drop(h.m, false);
    if (!ids.empty()) {
        // group head carries the smallest id thanks to the tie rule above
        EdgeId head = ids[0];
        for (std::size_t i = 1; i < ids.size(); ++i) {
            auto hv = h.edge(head), cur = h.edge(ids[i]);
            if (hv.size() == cur.size() && std::equal(hv.begin(), hv.end(), cur.begin())) {
                drop[ids[i]] = true;
                removed.emplace_back(ids[i], head);
            } else {
                head = ids[i];
            }
        }
    }
    std::sort(removed.begin(), removed.end());

    std::vector<std::vector<VertexId>> kept;
    kept.reserve(h.m - removed.size());
    for (std::uint32_t e = 0; e < h.m; ++e) {
        if (drop[e]) continue;
        auto ev = h.edge(static_cast<EdgeId>(e));
        kept.emplace_back(ev.begin(), ev.end());
    }
    CompactResult res{assemble(h.n, kept, h.original_id), std::move(removed)};
    return res;
}

std::uint32_t overlap_degree(const Hypergraph& h, EdgeId ei, EdgeId ej) {
    h.check_edge(ei);
    h.check_edge(ej);
    auto a = h.edge(ei), b = h.edge(ej);
    std::uint32_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++common; ++i; ++j; }
    }
    return common;
}

std::vector<std::pair<EdgeId, std::uint32_t>> neighbors(const Hypergraph& h, EdgeId e) {
    h.check_edge(e);
    NeighborCounter counter(h);
    std::vector<std::pair<EdgeId, std::uint32_t>> out;
    counter.for_each(e, [&](EdgeId other, std::uint32_t od) { out.emplace_back(other, od); });
    std::sort(out.begin(), out.end());
    return out;
}

GraphStats compute_stats(const Hypergraph& h) {
    GraphStats s;
    s.n = h.n;
    s.m = h.m;
    s.incidence = h.edge_vtx.size();
    for (std::uint32_t e = 0; e < h.m; ++e)
        s.delta = std::max(s.delta, h.edge_size(static_cast<EdgeId>(e)));
    for (std::uint32_t v = 0; v < h.n; ++v)
        s.d = std::max(s.d, h.degree(static_cast<VertexId>(v)));
    s.eta_max = s.d;
    s.eta_avg = h.n ? static_cast<double>(s.incidence) / h.n : 0.0;
    return s;
}

} // namespace hlx
