#include "hlx/order.hpp"

#include <algorithm>
#include <numeric>

namespace hlx {

HyperedgeOrder compute_order(const Hypergraph& h) {
    HyperedgeOrder o;
    o.weight.assign(h.m, 0);
    for (std::uint32_t e = 0; e < h.m; ++e) {
        unsigned __int128 w = 0;
        for (VertexId v : h.edge(static_cast<EdgeId>(e))) {
            unsigned __int128 deg = h.degree(v);
            w += deg * deg; // squared degrees fit 128 bits for any 32-bit n, m
        }
        o.weight[e] = w;
    }
    o.by_rank.resize(h.m);
    std::iota(o.by_rank.begin(), o.by_rank.end(), 0);
    std::sort(o.by_rank.begin(), o.by_rank.end(), [&](EdgeId a, EdgeId b) {
        if (o.weight[a] != o.weight[b]) return o.weight[a] > o.weight[b];
        return a < b;
    });
    o.rank.resize(h.m);
    for (std::uint32_t r = 0; r < h.m; ++r) o.rank[o.by_rank[r]] = r;
    return o;
}

} // namespace hlx
