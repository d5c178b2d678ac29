#include "hlx/online_search.hpp"

#include <algorithm>
#include <queue>

namespace hlx {

std::uint32_t wod(const Hypergraph& h, std::span<const EdgeId> walk) {
    if (walk.empty()) throw ArgumentError("empty walk");
    for (EdgeId e : walk) h.check_edge(e);
    if (walk.size() == 1) return h.edge_size(walk[0]);
    std::uint32_t best = UINT32_MAX;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        std::uint32_t od = overlap_degree(h, walk[i - 1], walk[i]);
        if (od == 0)
            throw InvalidWalkError("hyperedges " + std::to_string(walk[i - 1]) + " and " +
                                   std::to_string(walk[i]) + " share no vertex");
        best = std::min(best, od);
    }
    return best;
}

namespace {

struct Item {
    std::uint32_t s;
    EdgeId edge;
    bool operator<(const Item& o) const {
        if (s != o.s) return s < o.s;
        return edge > o.edge; // equal overlap: smaller id first
    }
};

} // namespace

OnlineSearch::OnlineSearch(const Hypergraph& h, SearchConfig cfg)
    : h_(&h), cfg_(cfg), counter_(h) {
    visit_[0].assign(h.m, 0);
    visit_[1].assign(h.m, 0);
    if (cfg_.neighbor_mode == NeighborMode::Precomputed) {
        pre_.resize(h.m);
        for (std::uint32_t e = 0; e < h.m; ++e)
            counter_.for_each(static_cast<EdgeId>(e), [&](EdgeId other, std::uint32_t od) {
                pre_[e].emplace_back(other, od);
            });
    }
}

template <class F>
void OnlineSearch::expand(EdgeId e, F&& fn) {
    if (cfg_.neighbor_mode == NeighborMode::Precomputed) {
        for (auto [other, od] : pre_[e]) {
            ++neighbor_scans_;
            fn(other, od);
        }
    } else {
        counter_.for_each(e, [&](EdgeId other, std::uint32_t od) {
            ++neighbor_scans_;
            fn(other, od);
        });
    }
}

std::uint32_t OnlineSearch::max_reach(VertexId u, VertexId v) {
    h_->check_vertex(u);
    h_->check_vertex(v);
    std::fill(visit_[0].begin(), visit_[0].end(), 0);
    std::fill(visit_[1].begin(), visit_[1].end(), 0);

    std::priority_queue<Item> queue[2];
    for (EdgeId e : h_->incident(v)) queue[0].push({h_->edge_size(e), e}); // toward v
    for (EdgeId e : h_->incident(u)) queue[1].push({h_->edge_size(e), e}); // toward u

    std::uint32_t result = 0;
    int side = 0;
    while (!queue[0].empty() || !queue[1].empty()) {
        if (cfg_.early_global_cutoff) {
            std::uint32_t top0 = queue[0].empty() ? 0 : queue[0].top().s;
            std::uint32_t top1 = queue[1].empty() ? 0 : queue[1].top().s;
            if (top0 <= result && top1 <= result) break;
        }
        auto& q = queue[side];
        auto& mine = visit_[side];
        auto& theirs = visit_[1 - side];
        // drain the current snapshot of this side, then hand over
        for (std::size_t count = q.size(); count > 0 && !q.empty(); --count) {
            const std::uint32_t s = q.top().s;
            const EdgeId e = q.top().edge;
            q.pop();
            ++pops_;
            if (s <= mine[e]) continue;
            mine[e] = s;
            // everything downstream of this pop is min-bounded by s, so a
            // walk no stronger than the answer has nothing left to offer
            if (s <= result) continue;
            if (theirs[e] > result) {
                result = std::min(s, theirs[e]);
                continue; // met the other side; this branch is settled
            }
            expand(e, [&](EdgeId other, std::uint32_t od) {
                if (od <= result) return;
                q.push({std::min(s, od), other});
            });
        }
        side = 1 - side;
    }
    return result;
}

std::uint32_t mr_online(const Hypergraph& h, VertexId u, VertexId v, SearchConfig cfg) {
    OnlineSearch search(h, cfg);
    return search.max_reach(u, v);
}

} // namespace hlx
