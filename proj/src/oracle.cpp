#include "hlx/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace hlx {

ReachOracle::ReachOracle(const Hypergraph& h) : h_(&h) {
    // overlap of every intersecting pair, via per-vertex incidence scans
    std::unordered_map<std::uint64_t, std::uint32_t> od;
    for (std::uint32_t v = 0; v < h.n; ++v) {
        auto inc = h.incident(static_cast<VertexId>(v));
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                od[(static_cast<std::uint64_t>(inc[i]) << 32) | inc[j]]++;
    }
    for (auto [key, s] : od) max_od_ = std::max(max_od_, s);
    by_od_.assign(max_od_ + 1, {});
    for (auto [key, s] : od)
        by_od_[s].emplace_back(static_cast<EdgeId>(key >> 32),
                               static_cast<EdgeId>(key & 0xffffffffu));
    for (auto& bucket : by_od_)
        std::sort(bucket.begin(), bucket.end());
}

std::uint32_t ReachOracle::max_reach(VertexId u, VertexId v) const {
    h_->check_vertex(u);
    h_->check_vertex(v);
    auto eu = h_->incident(u), ev = h_->incident(v);

    // single-hyperedge walks through a shared edge
    std::uint32_t best = 0;
    {
        std::size_t i = 0, j = 0;
        while (i < eu.size() && j < ev.size()) {
            if (eu[i] < ev[j]) ++i;
            else if (eu[i] > ev[j]) ++j;
            else { best = std::max(best, h_->edge_size(eu[i])); ++i; ++j; }
        }
    }
    // distinct incident edges joined at descending thresholds
    UnionFind uf(h_->m);
    for (std::uint32_t s = max_od_; s > best; --s) {
        for (auto [a, b] : by_od_[s]) uf.unite(a, b);
        for (EdgeId a : eu)
            for (EdgeId b : ev)
                if (a != b && uf.find(a) == uf.find(b)) return s;
    }
    return best;
}

std::uint32_t ReachOracle::vertex_to_edge(VertexId u, EdgeId e) const {
    h_->check_vertex(u);
    h_->check_edge(e);
    auto eu = h_->incident(u);
    std::uint32_t best =
        std::binary_search(eu.begin(), eu.end(), e) ? h_->edge_size(e) : 0;
    UnionFind uf(h_->m);
    for (std::uint32_t s = max_od_; s > best; --s) {
        for (auto [a, b] : by_od_[s]) uf.unite(a, b);
        for (EdgeId a : eu)
            if (a != e && uf.find(a) == uf.find(e)) return s;
    }
    return best;
}

bool ReachOracle::s_reach(VertexId u, VertexId v, std::uint32_t s) const {
    if (s < 1) throw ArgumentError("s must be positive");
    return max_reach(u, v) >= s;
}

std::vector<std::uint32_t> ReachOracle::all_pairs() const {
    const std::uint32_t n = h_->n;
    std::vector<std::uint32_t> mr(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](VertexId a, VertexId b) -> std::uint32_t& {
        return mr[static_cast<std::size_t>(a) * n + b];
    };
    for (std::uint32_t e = 0; e < h_->m; ++e) {
        auto ev = h_->edge(static_cast<EdgeId>(e));
        std::uint32_t size = static_cast<std::uint32_t>(ev.size());
        for (VertexId a : ev)
            for (VertexId b : ev) at(a, b) = std::max(at(a, b), size);
    }
    // merge components from the highest threshold down; the first time two
    // components join, every cross pair of their vertex sets is settled
    UnionFind uf(h_->m);
    std::vector<std::vector<VertexId>> verts(h_->m);
    for (std::uint32_t e = 0; e < h_->m; ++e) {
        auto ev = h_->edge(static_cast<EdgeId>(e));
        verts[e].assign(ev.begin(), ev.end());
    }
    for (std::uint32_t s = max_od_; s >= 1; --s) {
        for (auto [a, b] : by_od_[s]) {
            std::uint32_t ra = uf.find(a), rb = uf.find(b);
            if (ra == rb) continue;
            for (VertexId x : verts[ra])
                for (VertexId y : verts[rb]) {
                    at(x, y) = std::max(at(x, y), s);
                    at(y, x) = std::max(at(y, x), s);
                }
            uf.unite(a, b);
            std::uint32_t root = uf.find(a), other = root == ra ? rb : ra;
            if (verts[root].size() < verts[other].size()) std::swap(verts[root], verts[other]);
            verts[root].insert(verts[root].end(), verts[other].begin(), verts[other].end());
            std::sort(verts[root].begin(), verts[root].end());
            verts[root].erase(std::unique(verts[root].begin(), verts[root].end()),
                              verts[root].end());
            verts[other].clear();
        }
    }
    return mr;
}

std::vector<std::uint32_t> ReachOracle::edge_bottlenecks() const {
    const std::uint32_t m = h_->m;
    std::vector<std::uint32_t> bn(static_cast<std::size_t>(m) * m, 0);
    UnionFind uf(m);
    std::vector<std::vector<EdgeId>> members(m);
    for (std::uint32_t e = 0; e < m; ++e) members[e] = {static_cast<EdgeId>(e)};
    for (std::uint32_t s = max_od_; s >= 1; --s) {
        for (auto [a, b] : by_od_[s]) {
            std::uint32_t ra = uf.find(a), rb = uf.find(b);
            if (ra == rb) continue;
            for (EdgeId x : members[ra])
                for (EdgeId y : members[rb]) {
                    bn[static_cast<std::size_t>(x) * m + y] = s;
                    bn[static_cast<std::size_t>(y) * m + x] = s;
                }
            uf.unite(a, b);
            std::uint32_t root = uf.find(a), other = root == ra ? rb : ra;
            if (members[root].size() < members[other].size())
                std::swap(members[root], members[other]);
            members[root].insert(members[root].end(), members[other].begin(),
                                 members[other].end());
            members[other].clear();
        }
    }
    return bn;
}

std::uint32_t mr_oracle(const Hypergraph& h, VertexId u, VertexId v) {
    return ReachOracle(h).max_reach(u, v);
}

std::uint32_t vte_oracle(const Hypergraph& h, VertexId u, EdgeId e) {
    return ReachOracle(h).vertex_to_edge(u, e);
}

bool s_reach_oracle(const Hypergraph& h, VertexId u, VertexId v, std::uint32_t s) {
    return ReachOracle(h).s_reach(u, v, s);
}

std::uint32_t mcd_bruteforce(const Hypergraph& h, const HyperedgeOrder& order, EdgeId e) {
    h.check_edge(e);
    std::uint32_t best = 0;
    std::vector<std::uint32_t> bn = ReachOracle(h).edge_bottlenecks();
    for (std::uint32_t w = 0; w < h.m; ++w)
        if (order.rank[w] < order.rank[e])
            best = std::max(best, bn[static_cast<std::size_t>(w) * h.m + e]);
    return best;
}

} // namespace hlx
