#include "hlx/query.hpp"

#include "hlx/errors.hpp"

namespace hlx {

namespace {

void check_vertex(const HLIndex& index, VertexId v) {
    if (v >= index.n)
        throw ArgumentError("vertex id out of range: " + std::to_string(v));
}

} // namespace

QueryResult mr_query(const HLIndex& index, VertexId u, VertexId v) {
    check_vertex(index, u);
    check_vertex(index, v);
    const auto& lu = index.labels[u];
    const auto& lv = index.labels[v];
    const auto& rank = index.rank;

    QueryResult res;
    std::size_t i = 0, j = 0;
    std::uint32_t k = 0;
    while (i < lu.size() && j < lv.size()) {
        const Label& a = lu[i];
        const Label& b = lv[j];
        if (a.s <= k || rank[a.edge] < rank[b.edge]) {
            ++i;
            ++res.labels_scanned;
        } else if (b.s <= k || rank[a.edge] > rank[b.edge]) {
            ++j;
            ++res.labels_scanned;
        } else {
            k = std::min(a.s, b.s);
            ++i;
            ++j;
            res.labels_scanned += 2;
        }
    }
    res.value = k;
    return res;
}

bool s_reach_query(const HLIndex& index, VertexId u, VertexId v, std::uint32_t s) {
    if (s < 1) throw ArgumentError("s must be positive");
    check_vertex(index, u);
    check_vertex(index, v);
    const auto& lu = index.labels[u];
    const auto& lv = index.labels[v];
    const auto& rank = index.rank;

    const std::uint32_t k = s - 1;
    std::size_t i = 0, j = 0;
    while (i < lu.size() && j < lv.size()) {
        const Label& a = lu[i];
        const Label& b = lv[j];
        if (a.s <= k || rank[a.edge] < rank[b.edge]) ++i;
        else if (b.s <= k || rank[a.edge] > rank[b.edge]) ++j;
        else return true;
    }
    return false;
}

std::vector<BatchOutcome> batch_query(const HLIndex& index, std::span<const QueryTask> tasks,
                                      int threads) {
    std::vector<BatchOutcome> out(tasks.size());
    auto run_one = [&](std::size_t i) {
        BatchOutcome& slot = out[i];
        try {
            const QueryTask& t = tasks[i];
            if (t.s == 0) {
                slot.value = mr_query(index, t.u, t.v).value;
            } else {
                slot.is_reach = true;
                slot.reach = s_reach_query(index, t.u, t.v, t.s);
            }
        } catch (const std::exception& e) {
            slot.failed = true;
            slot.error = e.what();
        }
    };
    if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
            run_one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    }
    return out;
}

} // namespace hlx
