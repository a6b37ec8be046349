#include "evencover/cleaning.hpp"

#include <cmath>
#include <map>
#include <set>

namespace evencover::cleaning {

namespace {

long long ceil_threshold(double v) {
    long long c = (long long)std::ceil(v - 1e-9);
    return std::max(c, 1LL);
}

// All t-subsets of residual edges with their codegree, sorted by set.
std::map<VertexSet, int> subset_counts(const Hypergraph& h, const std::vector<char>& alive,
                                       int t) {
    std::map<VertexSet, int> counts;
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (!alive[i]) continue;
        const auto& e = h.edges[i];
        if ((int)e.size() < t) continue;
        auto c = first_combination(t);
        do {
            VertexSet s(t);
            for (int j = 0; j < t; ++j) s[j] = e[c[j]];
            ++counts[s];
        } while (next_combination(c, (uint32_t)e.size()));
    }
    return counts;
}

}  // namespace

CoreResult min_degree_core(const Hypergraph& h) {
    check(h.edge_count() >= 1, "min_degree_core: empty hypergraph");
    const long long e0 = h.edge_count();
    const long long n = h.n;
    // deg(v) < d/2  <=>  2*n*deg(v) < e0, with d = e0/n kept exact
    std::vector<char> vertex_alive(h.n, 1);
    std::vector<char> edge_alive(h.edges.size(), 1);
    std::vector<long long> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (Vertex v : e) ++deg[v];

    std::vector<Vertex> removed;
    for (;;) {
        int victim = -1;
        for (int v = 0; v < h.n; ++v) {
            if (vertex_alive[v] && 2 * n * deg[v] < e0) {
                victim = v;
                break;
            }
        }
        if (victim < 0) break;
        vertex_alive[victim] = 0;
        removed.push_back((Vertex)victim);
        for (size_t i = 0; i < h.edges.size(); ++i) {
            if (!edge_alive[i]) continue;
            if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), (Vertex)victim)) {
                edge_alive[i] = 0;
                for (Vertex v : h.edges[i]) --deg[v];
            }
        }
    }

    std::vector<EdgeIndex> keep;
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (edge_alive[i]) keep.push_back((EdgeIndex)i);
    auto [sub, origin] = sub_hypergraph(h, keep);
    return {std::move(sub), std::move(origin), std::move(removed)};
}

CleaningOutcome single_vertex_buckets(const Hypergraph& h) {
    check(h.edge_count() >= 2, "single_vertex_buckets: need at least 2 edges");
    const long long e0 = h.edge_count();
    const long long b = std::max(1LL, e0 / (2 * (long long)h.n));

    std::vector<char> alive(h.edges.size(), 1);
    std::vector<long long> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (Vertex v : e) ++deg[v];

    std::vector<Bucket> buckets;
    long long covered = 0;
    while (2 * covered < e0) {
        int pick = -1;
        for (int v = 0; v < h.n; ++v) {
            if (deg[v] >= b) {
                pick = v;
                break;
            }
        }
        check(pick >= 0, "single_vertex_buckets: no vertex of residual degree >= b");
        Bucket bu;
        bu.core = {(Vertex)pick};
        for (size_t i = 0; i < h.edges.size() && (long long)bu.members.size() < b; ++i) {
            if (!alive[i]) continue;
            if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), (Vertex)pick))
                bu.members.push_back((EdgeIndex)i);
        }
        for (EdgeIndex i : bu.members) {
            alive[i] = 0;
            for (Vertex v : h.edge(i)) --deg[v];
        }
        covered += (long long)bu.members.size();
        buckets.push_back(std::move(bu));
    }

    std::vector<EdgeIndex> keep;
    for (const auto& bu : buckets)
        for (EdgeIndex i : bu.members) keep.push_back(i);
    auto [sub, origin] = sub_hypergraph(h, keep);

    // remap member indices into sub
    std::map<EdgeIndex, EdgeIndex> remap;
    for (size_t i = 0; i < origin.size(); ++i) remap[origin[i]] = (EdgeIndex)i;
    BucketDecomposition dec;
    dec.m = (int)b;
    dec.t = 1;
    for (auto& bu : buckets) {
        for (auto& i : bu.members) i = remap[i];
        dec.buckets.push_back(std::move(bu));
    }

    CleaningOutcome out;
    out.kind = OutcomeKind::Bucketed;
    out.sub = std::move(sub);
    out.origin = std::move(origin);
    out.decomposition = std::move(dec);
    out.t = 1;
    out.degenerate = out.sub.edges.empty();
    return out;
}

CleaningOutcome prune_or_bucket(const Hypergraph& h, int t, int m, int e_budget) {
    check(t >= 1 && t <= h.k, "prune_or_bucket: need 1 <= t <= k");
    check(m >= 1, "prune_or_bucket: need m >= 1");
    std::vector<char> alive(h.edges.size(), 1);

    std::vector<Bucket> buckets;
    long long covered = 0;
    const long long target = std::max((long long)e_budget, 1LL);
    while (covered < target) {
        auto counts = subset_counts(h, alive, t);
        const VertexSet* heavy = nullptr;
        for (const auto& [s, c] : counts) {
            if (c >= m) {
                heavy = &s;
                break;  // map iterates in lexicographic order
            }
        }
        if (!heavy) break;
        Bucket bu;
        bu.core = *heavy;
        for (size_t i = 0; i < h.edges.size() && (int)bu.members.size() < m; ++i)
            if (alive[i] && sorted_contains(h.edges[i], bu.core))
                bu.members.push_back((EdgeIndex)i);
        for (EdgeIndex i : bu.members) alive[i] = 0;
        covered += (long long)bu.members.size();
        buckets.push_back(std::move(bu));
    }

    CleaningOutcome out;
    if (covered > 0 && covered >= (long long)e_budget) {
        std::vector<EdgeIndex> keep;
        for (const auto& bu : buckets)
            for (EdgeIndex i : bu.members) keep.push_back(i);
        auto [sub, origin] = sub_hypergraph(h, keep);
        std::map<EdgeIndex, EdgeIndex> remap;
        for (size_t i = 0; i < origin.size(); ++i) remap[origin[i]] = (EdgeIndex)i;
        BucketDecomposition dec;
        dec.m = m;
        dec.t = t;
        for (auto& bu : buckets) {
            for (auto& i : bu.members) i = remap[i];
            dec.buckets.push_back(std::move(bu));
        }
        out.kind = OutcomeKind::Bucketed;
        out.sub = std::move(sub);
        out.origin = std::move(origin);
        out.decomposition = std::move(dec);
    } else {
        std::vector<EdgeIndex> keep;
        for (size_t i = 0; i < h.edges.size(); ++i)
            if (alive[i]) keep.push_back((EdgeIndex)i);
        auto [sub, origin] = sub_hypergraph(h, keep);
        out.kind = OutcomeKind::PrunedLowCodegree;
        out.sub = std::move(sub);
        out.origin = std::move(origin);
    }
    out.t = t;
    out.degenerate = out.sub.edges.empty();
    return out;
}

PairReduction pair_reduction(const BucketDecomposition& d, const Hypergraph& host) {
    check(host.k % 2 == 1, "pair_reduction: host uniformity must be odd");
    check(d.m == 2, "pair_reduction: decomposition must have m = 2");
    check(!d.buckets.empty(), "pair_reduction: empty decomposition");
    check(valid_decomposition(host, d), "pair_reduction: decomposition inconsistent with host");

    std::map<int, int> j_count;
    std::vector<int> j_of(d.buckets.size());
    for (size_t i = 0; i < d.buckets.size(); ++i) {
        const auto& y = host.edge(d.buckets[i].members[0]);
        const auto& z = host.edge(d.buckets[i].members[1]);
        int j = (int)intersection_size(y, z);
        check(j < host.k, "pair_reduction: bucket with identical member edges");
        j_of[i] = j;
        ++j_count[j];
    }
    int best_j = -1, best_c = -1;
    for (auto [j, c] : j_count) {
        if (c > best_c) {
            best_c = c;
            best_j = j;
        }
    }

    PairReduction pr;
    pr.j = best_j;
    pr.g.n = host.n;
    pr.g.k = 2 * (host.k - best_j);
    pr.g.multi = true;
    for (size_t i = 0; i < d.buckets.size(); ++i) {
        if (j_of[i] != best_j) continue;
        EdgeIndex yi = d.buckets[i].members[0], zi = d.buckets[i].members[1];
        pr.g.edges.push_back(symmetric_difference(host.edge(yi), host.edge(zi)));
        pr.lift.emplace_back(yi, zi);
    }
    return pr;
}

EvenCover lift_cover(const PairReduction& pr, const EvenCover& gcover) {
    EvenCover out;
    for (EdgeIndex i : gcover.edges) {
        check(i >= 0 && i < (EdgeIndex)pr.lift.size(), "lift_cover: index out of range");
        out.edges.push_back(pr.lift[i].first);
        out.edges.push_back(pr.lift[i].second);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

LowCodegreeResult low_codegree_reduct(const Hypergraph& h, int l, int budget) {
    check(h.k % 2 == 1, "low_codegree_reduct: k must be odd");
    if (budget < 0) {
        // pruning allowance n (n/l)^((k-3)/2) log2 n, capped at the edge count
        double allowance = h.n *
                           std::pow((double)h.n / std::max(l, 1), (h.k - 3) / 2.0) *
                           std::max(std::log2((double)std::max(h.n, 2)), 1.0);
        budget = (int)std::min<double>(std::ceil(allowance), (double)h.edge_count());
    }
    LowCodegreeResult res;
    res.outcome = prune_or_bucket(h, (h.k + 1) / 2, 2, budget);
    if (res.outcome.kind == OutcomeKind::Bucketed)
        res.reduction = pair_reduction(*res.outcome.decomposition, res.outcome.sub);
    return res;
}

CleaningOutcome multilevel_clean(const Hypergraph& h, const std::function<double(int)>& m) {
    const long long e0 = h.edge_count();
    check(e0 >= 1, "multilevel_clean: empty hypergraph");
    const int rmax = h.k / 2;

    std::vector<char> alive(h.edges.size(), 1);
    std::map<int, std::vector<Bucket>> pools;
    long long extracted = 0;
    bool crossed_half = false;

    std::vector<double> thresholds(h.k + 1, 0.0);
    for (int r = 1; r <= h.k; ++r) thresholds[r] = m(r);

    while (!crossed_half) {
        int pick_r = -1;
        VertexSet pick_set;
        for (int r = rmax; r >= 2 && pick_r < 0; --r) {
            auto counts = subset_counts(h, alive, r);
            for (const auto& [s, c] : counts) {
                if ((double)c >= thresholds[r] - 1e-9) {
                    pick_r = r;
                    pick_set = s;
                    break;
                }
            }
        }
        if (pick_r < 0) break;
        long long cnt = ceil_threshold(thresholds[pick_r]);
        Bucket bu;
        bu.core = pick_set;
        for (size_t i = 0; i < h.edges.size() && (long long)bu.members.size() < cnt; ++i)
            if (alive[i] && sorted_contains(h.edges[i], bu.core))
                bu.members.push_back((EdgeIndex)i);
        for (EdgeIndex i : bu.members) alive[i] = 0;
        extracted += (long long)bu.members.size();
        pools[pick_r].push_back(std::move(bu));
        if (2 * extracted > e0) crossed_half = true;
    }

    CleaningOutcome out;
    out.thresholds = thresholds;
    if (crossed_half) {
        // pigeonhole: hand back the largest pool (ties to the smallest r)
        int best_r = -1;
        long long best_sz = -1;
        for (const auto& [r, bs] : pools) {
            long long sz = 0;
            for (const auto& b : bs) sz += (long long)b.members.size();
            if (sz > best_sz) {
                best_sz = sz;
                best_r = r;
            }
        }
        std::vector<EdgeIndex> keep;
        for (const auto& b : pools[best_r])
            for (EdgeIndex i : b.members) keep.push_back(i);
        auto [sub, origin] = sub_hypergraph(h, keep);
        std::map<EdgeIndex, EdgeIndex> remap;
        for (size_t i = 0; i < origin.size(); ++i) remap[origin[i]] = (EdgeIndex)i;
        BucketDecomposition dec;
        dec.m = (int)ceil_threshold(thresholds[best_r]);
        dec.t = best_r;
        for (auto bu : pools[best_r]) {
            for (auto& i : bu.members) i = remap[i];
            dec.buckets.push_back(std::move(bu));
        }
        out.kind = OutcomeKind::Bucketed;
        out.t = best_r;
        out.sub = std::move(sub);
        out.origin = std::move(origin);
        out.decomposition = std::move(dec);
    } else {
        std::vector<EdgeIndex> keep;
        for (size_t i = 0; i < h.edges.size(); ++i)
            if (alive[i]) keep.push_back((EdgeIndex)i);
        auto [residual, res_origin] = sub_hypergraph(h, keep);
        CoreResult core = min_degree_core(residual);
        out.kind = OutcomeKind::MinDegreeCore;
        out.t = 1;
        out.sub = std::move(core.sub);
        out.origin.reserve(core.origin.size());
        for (EdgeIndex i : core.origin) out.origin.push_back(res_origin[i]);
    }
    out.degenerate = out.sub.edges.empty();
    return out;
}

}  // namespace evencover::cleaning
