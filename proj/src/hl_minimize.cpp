#include "hlx/hl_minimize.hpp"

#include <algorithm>

#include "hlx/oracle.hpp"
#include "hlx/query.hpp"

namespace hlx {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

std::size_t find_label(const std::vector<Label>& labels, const std::vector<std::uint32_t>& rank,
                       EdgeId e) {
    auto it = std::partition_point(labels.begin(), labels.end(), [&](const Label& l) {
        return rank[l.edge] < rank[e];
    });
    if (it == labels.end() || it->edge != e) return SIZE_MAX;
    return static_cast<std::size_t>(it - labels.begin());
}

void check_pair_integrity(const HLIndex& index, const DualIndex& dual) {
    if (dual.entries.size() != index.m)
        throw IntegrityError("dual index size differs from hyperedge count");
    std::uint64_t dual_total = 0;
    for (std::uint32_t e = 0; e < index.m; ++e) {
        const auto& de = dual.entries[e];
        dual_total += de.size();
        for (std::size_t i = 0; i < de.size(); ++i) {
            auto [u, s] = de[i];
            if (i > 0 && de[i - 1].second < s)
                throw IntegrityError("dual list not non-ascending in s");
            if (u >= index.n) throw IntegrityError("dual entry vertex out of range");
            std::size_t pos = find_label(index.labels[u], index.rank, static_cast<EdgeId>(e));
            if (pos == SIZE_MAX || index.labels[u][pos].s != s)
                throw IntegrityError("dual entry without matching label");
        }
    }
    if (dual_total != index.total_labels())
        throw IntegrityError("label and dual totals differ");
}

std::uint32_t merge_max_min(const std::vector<Label>& lu, const std::vector<Label>& lv,
                            const std::vector<std::uint32_t>& rank) {
    std::size_t i = 0, j = 0;
    std::uint32_t k = 0;
    while (i < lu.size() && j < lv.size()) {
        const Label& a = lu[i];
        const Label& b = lv[j];
        if (a.s <= k || rank[a.edge] < rank[b.edge]) ++i;
        else if (b.s <= k || rank[a.edge] > rank[b.edge]) ++j;
        else { k = std::min(a.s, b.s); ++i; ++j; }
    }
    return k;
}

} // namespace

MinimizeResult minimize(HLIndex index, DualIndex dual, const HyperedgeOrder& order) {
    check_pair_integrity(index, dual);

    MinimizeResult out;
    out.stats.lv_max = 0;
    for (const auto& l : index.labels)
        out.stats.lv_max = std::max<std::uint32_t>(out.stats.lv_max,
                                                   static_cast<std::uint32_t>(l.size()));
    for (const auto& d : dual.entries)
        out.stats.theta = std::max<std::uint32_t>(out.stats.theta,
                                                  static_cast<std::uint32_t>(d.size()));

    const std::uint32_t n = index.n;
    const std::uint32_t m = index.m;
    const auto& rank = index.rank;

    std::vector<std::vector<std::uint8_t>> alive(n);
    for (std::uint32_t u = 0; u < n; ++u) alive[u].assign(index.labels[u].size(), 1);

    // inverted support lists, remade lazily per hub epoch
    std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> inv(m);
    std::vector<std::uint32_t> inv_epoch(m, kNone);
    std::vector<std::uint8_t> in_dual(n, 0); // still unprocessed in the current hub
    std::vector<std::uint8_t> not_redundant(n, 0);
    std::vector<std::uint32_t> support_stamp(n, 0);
    std::uint32_t support_counter = 0;

    for (std::uint32_t epoch = 0; epoch < m; ++epoch) {
        const EdgeId hub = order.by_rank[epoch];
        auto& de = dual.entries[hub];
        if (de.empty()) continue;

        for (auto [v, sv] : de) {
            const auto& lv = index.labels[v];
            const auto& av = alive[v];
            for (std::size_t li = 0; li < lv.size(); ++li) {
                if (!av[li] || lv[li].s < sv) continue;
                EdgeId supporter = lv[li].edge;
                if (inv_epoch[supporter] != epoch) {
                    inv_epoch[supporter] = epoch;
                    inv[supporter].clear();
                }
                inv[supporter].emplace_back(v, sv);
                out.stats.beta = std::max<std::uint32_t>(
                    out.stats.beta, static_cast<std::uint32_t>(inv[supporter].size()));
            }
            in_dual[v] = 1;
            not_redundant[v] = 0;
        }

        std::uint32_t nr_count = 0;
        std::uint32_t remaining = static_cast<std::uint32_t>(de.size());
        for (std::size_t pos = 0; pos < de.size(); ++pos) {
            auto [u, su] = de[pos];
            ++out.stats.examined;

            ++support_counter;
            std::uint32_t supported = 0;
            bool all_supported = false;
            const auto& lu = index.labels[u];
            const auto& au = alive[u];
            for (std::size_t li = 0; li < lu.size() && !all_supported; ++li) {
                if (!au[li] || lu[li].edge == hub) continue;
                if (inv_epoch[lu[li].edge] != epoch) continue;
                const std::uint32_t s_here = lu[li].s;
                for (auto [v, sv] : inv[lu[li].edge]) {
                    if (!in_dual[v] || s_here < sv) continue;
                    if (support_stamp[v] == support_counter) continue;
                    support_stamp[v] = support_counter;
                    if (++supported == remaining) {
                        all_supported = true;
                        break;
                    }
                }
            }

            if (supported < remaining || not_redundant[u]) {
                // every unsupported partner relies on this hub alone, so its
                // own entry here is pinned as well
                if (!all_supported) {
                    for (std::size_t q = pos; q < de.size(); ++q) {
                        VertexId w = de[q].first;
                        if (!in_dual[w] || support_stamp[w] == support_counter) continue;
                        if (!not_redundant[w]) {
                            not_redundant[w] = 1;
                            ++nr_count;
                        }
                    }
                }
            } else {
                std::size_t li = find_label(index.labels[u], rank, hub);
                alive[u][li] = 0;
                ++out.stats.removed;
            }

            if (not_redundant[u]) {
                not_redundant[u] = 0;
                --nr_count;
            }
            in_dual[u] = 0;
            --remaining;
            if (nr_count == remaining) break; // the rest is already pinned
        }

        for (auto [v, sv] : de) {
            in_dual[v] = 0;
            not_redundant[v] = 0;
        }
    }

    out.index.n = n;
    out.index.m = m;
    out.index.flavor = IndexFlavor::Minimal;
    out.index.rank = index.rank;
    out.index.labels.resize(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::size_t li = 0; li < index.labels[u].size(); ++li)
            if (alive[u][li]) out.index.labels[u].push_back(index.labels[u][li]);
    }
    return out;
}

CompletenessReport verify_completeness(const HLIndex& index, const Hypergraph& h) {
    CompletenessReport report;
    if (h.n == 0) return report;
    ReachOracle oracle(h);
    std::vector<std::uint32_t> expected = oracle.all_pairs();
    for (std::uint32_t u = 0; u < h.n; ++u) {
        for (std::uint32_t v = u; v < h.n; ++v) {
            std::uint32_t got = mr_query(index, u, v).value;
            std::uint32_t want = expected[static_cast<std::size_t>(u) * h.n + v];
            if (got != want) report.mismatches.push_back({u, v, got, want});
        }
    }
    return report;
}

NecessityReport verify_necessity(const HLIndex& index, const Hypergraph& h) {
    NecessityReport report;
    if (h.n == 0) return report;
    ReachOracle oracle(h);
    std::vector<std::uint32_t> expected = oracle.all_pairs();

    std::vector<Label> masked;
    for (std::uint32_t u = 0; u < h.n; ++u) {
        const auto& lu = index.labels[u];
        for (std::size_t skip = 0; skip < lu.size(); ++skip) {
            masked.clear();
            for (std::size_t i = 0; i < lu.size(); ++i)
                if (i != skip) masked.push_back(lu[i]);

            bool breaks_something = false;
            for (std::uint32_t v = 0; v < h.n && !breaks_something; ++v) {
                const auto& other = (v == u) ? masked : index.labels[v];
                std::uint32_t got = merge_max_min(masked, other, index.rank);
                if (got != expected[static_cast<std::size_t>(u) * h.n + v])
                    breaks_something = true;
            }
            if (!breaks_something) report.redundant.push_back({u, lu[skip]});
        }
    }
    return report;
}

} // namespace hlx
