#include "evencover/kikuchi.hpp"

#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

namespace evencover::kikuchi {

namespace {

VertexSet shift_blue(const VertexSet& s, uint32_t n) {
    VertexSet out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = s[i] + n;
    return out;
}

// red ids < n <= blue ids, so concatenation is already sorted
VertexSet concat_rb(const VertexSet& red, const VertexSet& blue) {
    VertexSet out;
    out.reserve(red.size() + blue.size());
    out.insert(out.end(), red.begin(), red.end());
    out.insert(out.end(), blue.begin(), blue.end());
    return out;
}

template <typename Fn>
void for_each_subset(const VertexSet& base, int r, Fn&& fn) {
    if (r < 0 || r > (int)base.size()) return;
    auto c = first_combination((uint32_t)r);
    do {
        VertexSet s((size_t)r);
        for (int i = 0; i < r; ++i) s[i] = base[c[i]];
        fn(s);
    } while (next_combination(c, (uint32_t)base.size()));
}

// subsets of `base` of size r that contain base[0]
template <typename Fn>
void for_each_subset_with_first(const VertexSet& base, int r, Fn&& fn) {
    if (base.empty() || r < 1) return;
    VertexSet rest(base.begin() + 1, base.end());
    for_each_subset(rest, r - 1, [&](const VertexSet& s) {
        VertexSet full;
        full.reserve((size_t)r);
        full.push_back(base[0]);
        full.insert(full.end(), s.begin(), s.end());
        std::sort(full.begin(), full.end());
        fn(full);
    });
}

void validate_kvertex(const KVertex& s, int l, uint32_t ground) {
    check((int)s.size() == l, "kikuchi: vertex has wrong cardinality");
    check(std::is_sorted(s.begin(), s.end()), "kikuchi: vertex not sorted");
    check(s.empty() || s.back() < ground, "kikuchi: vertex element out of range");
}

struct OddPre {
    // per bucket: global member indices, red reduced sets, blue reduced sets
    std::vector<std::vector<EdgeIndex>> members;
    std::vector<std::vector<VertexSet>> red;
    std::vector<std::vector<VertexSet>> blue;
};

OddPre odd_precompute(const ColoredHypergraph& h, const BucketDecomposition& d) {
    OddPre pre;
    uint32_t n = (uint32_t)h.base.n;
    for (const auto& b : d.buckets) {
        std::vector<EdgeIndex> mem = b.members;
        std::vector<VertexSet> red, blue;
        for (EdgeIndex i : mem) {
            VertexSet reduced = sorted_difference(h.base.edge(i), b.core);
            blue.push_back(shift_blue(reduced, n));
            red.push_back(std::move(reduced));
        }
        pre.members.push_back(std::move(mem));
        pre.red.push_back(std::move(red));
        pre.blue.push_back(std::move(blue));
    }
    return pre;
}

struct FlowerPre {
    std::vector<int32_t> good_ids;           // indices into gadget list, ascending
    std::vector<std::vector<VertexSet>> qs;  // petals minus their center vertex
    std::vector<VertexSet> w;                // xor of the whole gadget
};

FlowerPre flower_precompute(const Hypergraph& h, const std::vector<FlowerGadget>& gadgets) {
    FlowerPre pre;
    for (size_t gi = 0; gi < gadgets.size(); ++gi) {
        if (!gadgets[gi].good) continue;
        const auto& g = gadgets[gi];
        const VertexSet& c = h.edge(g.center);
        std::vector<VertexSet> qs;
        VertexSet w;
        for (int i = 0; i < h.k; ++i) {
            VertexSet q = sorted_difference(h.edge(g.petals[i]), VertexSet{c[i]});
            w = sorted_union(w, q);
            qs.push_back(std::move(q));
        }
        pre.good_ids.push_back((int32_t)gi);
        pre.qs.push_back(std::move(qs));
        pre.w.push_back(std::move(w));
    }
    return pre;
}

KEdgeInfo flower_info(const FlowerGadget& g) {
    KEdgeInfo info;
    info.assoc.push_back(g.center);
    for (EdgeIndex p : g.petals) info.assoc.push_back(p);
    info.colors = {(uint32_t)g.center, 0};
    info.ncolors = 1;
    return info;
}

}  // namespace

void EdgeColoredGraph::rebuild_adjacency() {
    adj.assign((size_t)num_vertices, {});
    for (size_t eid = 0; eid < edges.size(); ++eid) {
        const auto& e = edges[eid];
        adj[(size_t)e.u].emplace_back(e.v, (int32_t)eid);
        adj[(size_t)e.v].emplace_back(e.u, (int32_t)eid);
    }
}

bool graph_properly_colored(const EdgeColoredGraph& g) {
    std::set<std::pair<int64_t, uint32_t>> seen;
    for (const auto& e : g.edges) {
        for (int64_t w : {e.u, e.v}) {
            for (int c = 0; c < e.info.ncolors; ++c) {
                if (c == 1 && e.info.colors[1] == e.info.colors[0]) continue;
                if (!seen.insert({w, e.info.colors[c]}).second) return false;
            }
        }
    }
    return true;
}

EdgeColoredGraph prune_heavy_colors_graph(const EdgeColoredGraph& g, double threshold) {
    std::map<std::pair<int64_t, uint32_t>, int64_t> count;
    for (const auto& e : g.edges) {
        for (int64_t w : {e.u, e.v}) {
            for (int c = 0; c < e.info.ncolors; ++c) {
                if (c == 1 && e.info.colors[1] == e.info.colors[0]) continue;
                ++count[{w, e.info.colors[c]}];
            }
        }
    }
    EdgeColoredGraph out;
    out.num_vertices = g.num_vertices;
    for (const auto& e : g.edges) {
        bool heavy = false;
        for (int64_t w : {e.u, e.v})
            for (int c = 0; c < e.info.ncolors && !heavy; ++c)
                if ((double)count[{w, e.info.colors[c]}] > threshold) heavy = true;
        if (!heavy) out.edges.push_back(e);
    }
    out.rebuild_adjacency();
    return out;
}

EdgeColoredGraph properize_graph(const EdgeColoredGraph& g) {
    return prune_heavy_colors_graph(g, 1.0);
}

KGraph build_even_kikuchi(const Hypergraph& h, int l, Backend backend) {
    check(h.k % 2 == 0, "even kikuchi: k must be even");
    check(l >= h.k / 2, "even kikuchi: need l >= k/2");
    check(l >= 1 && l <= h.n, "even kikuchi: need 1 <= l <= n");

    KGraph g;
    g.mode = Mode::EvenK;
    g.backend = backend;
    g.host = ColoredHypergraph{h, {}, {}};
    g.l = l;
    if (backend == Backend::Implicit) return g;

    uint64_t nv = binom((uint64_t)h.n, (uint64_t)l);
    check(nv <= kExplicitGuard, "even kikuchi: explicit guard C(n,l) <= 1e6 violated");
    EdgeColoredGraph eg;
    eg.num_vertices = (int64_t)nv;

    VertexSet all(h.n);
    for (int i = 0; i < h.n; ++i) all[i] = (Vertex)i;
    const int half = h.k / 2;
    for (size_t ei = 0; ei < h.edges.size(); ++ei) {
        const VertexSet& e = h.edges[ei];
        VertexSet rest = sorted_difference(all, e);
        const int rsize = l - half;
        if (rsize > (int)rest.size()) continue;
        KEdgeInfo info;
        info.assoc = {(EdgeIndex)ei};
        info.colors = {(uint32_t)ei, 0};
        info.ncolors = 1;
        for_each_subset_with_first(e, half, [&](const VertexSet& a) {
            VertexSet b = sorted_difference(e, a);
            for_each_subset(rest, rsize, [&](const VertexSet& r) {
                VertexSet s = sorted_union(a, r);
                VertexSet t = sorted_union(b, r);
                eg.edges.push_back({(int64_t)colex_rank(s), (int64_t)colex_rank(t), info});
            });
        });
    }
    eg.rebuild_adjacency();
    g.graph = std::move(eg);
    return g;
}

KGraph build_odd_kikuchi(const ColoredHypergraph& h, const BucketDecomposition& d, int l,
                         Backend backend) {
    check(h.is_colored(), "odd kikuchi: host must be colored");
    check(valid_decomposition(h.base, d), "odd kikuchi: decomposition inconsistent with host");
    const int k = h.base.k;
    const int t = d.t;
    check(t >= 1 && t < k, "odd kikuchi: need 1 <= t < k");
    const int q = k - t;
    check(l >= q, "odd kikuchi: need l >= k - t");
    const uint32_t n = (uint32_t)h.base.n;
    check(l <= 2 * (int)n, "odd kikuchi: need l <= 2n");

    KGraph g;
    g.mode = Mode::OddK;
    g.backend = backend;
    g.host = h;
    g.l = l;
    g.t = t;
    g.decomposition = d;
    if (backend == Backend::Implicit) return g;

    uint64_t nv = binom(2ull * n, (uint64_t)l);
    check(nv <= kExplicitGuard, "odd kikuchi: explicit guard C(2n,l) <= 1e6 violated");
    EdgeColoredGraph eg;
    eg.num_vertices = (int64_t)nv;

    OddPre pre = odd_precompute(h, d);
    VertexSet ground(2 * n);
    for (uint32_t i = 0; i < 2 * n; ++i) ground[i] = i;
    const int hi = (q + 1) / 2, lo = q / 2;

    for (size_t bi = 0; bi < pre.members.size(); ++bi) {
        const auto& mem = pre.members[bi];
        for (size_t ai = 0; ai < mem.size(); ++ai) {
            for (size_t bj = 0; bj < mem.size(); ++bj) {
                if (ai == bj) continue;
                const VertexSet& red = pre.red[bi][ai];
                const VertexSet& blue = pre.blue[bi][bj];
                VertexSet dset = concat_rb(red, blue);
                VertexSet rest = sorted_difference(ground, dset);
                const int rsize = l - q;
                if (rsize > (int)rest.size()) continue;
                KEdgeInfo info;
                info.assoc = {mem[ai], mem[bj]};
                info.colors = {h.colors[mem[ai]], h.colors[mem[bj]]};
                info.ncolors = 2;
                auto emit_for_a = [&](const VertexSet& a) {
                    VertexSet ra = sorted_difference(red, a);
                    for_each_subset(blue, lo, [&](const VertexSet& b) {
                        VertexSet rb = sorted_difference(blue, b);
                        VertexSet sab = concat_rb(a, b);
                        VertexSet tab = concat_rb(ra, rb);
                        for_each_subset(rest, rsize, [&](const VertexSet& r) {
                            VertexSet s = sorted_union(sab, r);
                            VertexSet t = sorted_union(tab, r);
                            eg.edges.push_back(
                                {(int64_t)colex_rank(s), (int64_t)colex_rank(t), info});
                        });
                    });
                };
                if (q % 2 == 1)
                    for_each_subset(red, hi, emit_for_a);
                else
                    for_each_subset_with_first(red, hi, emit_for_a);
            }
        }
    }
    eg.rebuild_adjacency();
    g.graph = std::move(eg);
    return g;
}

KGraph build_flower_kikuchi(const Hypergraph& h, const std::vector<FlowerGadget>& gadgets,
                            int l, Backend backend) {
    const int k = h.k;
    check(k % 2 == 1 && k >= 3, "flower kikuchi: k must be odd, >= 3");
    check(l >= k * (k - 1) / 2, "flower kikuchi: need l >= k(k-1)/2");
    check(l <= h.n, "flower kikuchi: need l <= n");

    KGraph g;
    g.mode = Mode::Flower;
    g.backend = backend;
    g.host = ColoredHypergraph{h, {}, {}};
    g.l = l;
    g.gadgets = gadgets;
    if (backend == Backend::Implicit) return g;

    uint64_t nv = binom((uint64_t)h.n, (uint64_t)l);
    check(nv <= kExplicitGuard, "flower kikuchi: explicit guard C(n,l) <= 1e6 violated");
    EdgeColoredGraph eg;
    eg.num_vertices = (int64_t)nv;

    FlowerPre pre = flower_precompute(h, gadgets);
    VertexSet all(h.n);
    for (int i = 0; i < h.n; ++i) all[i] = (Vertex)i;
    const int half = (k - 1) / 2;
    std::set<std::pair<int64_t, int64_t>> seen;  // gadget order fixes the color on collisions

    for (size_t p = 0; p < pre.good_ids.size(); ++p) {
        const FlowerGadget& gad = gadgets[pre.good_ids[p]];
        const auto& qs = pre.qs[p];
        const VertexSet& w = pre.w[p];
        VertexSet rest = sorted_difference(all, w);
        const int rsize = l - k * (k - 1) / 2;
        if (rsize > (int)rest.size()) continue;
        KEdgeInfo info = flower_info(gad);

        // choose S's half of every petal; the first petal's choice is pinned
        // to contain its least element so each unordered pair arises once
        std::vector<VertexSet> ls(k);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                VertexSet s_core, t_core;
                for (int j = 0; j < k; ++j) {
                    s_core = sorted_union(s_core, ls[j]);
                    t_core = sorted_union(t_core, sorted_difference(qs[j], ls[j]));
                }
                for_each_subset(rest, rsize, [&](const VertexSet& r) {
                    VertexSet s = sorted_union(s_core, r);
                    VertexSet t = sorted_union(t_core, r);
                    int64_t ru = (int64_t)colex_rank(s), rv = (int64_t)colex_rank(t);
                    auto key = std::minmax(ru, rv);
                    if (!seen.insert({key.first, key.second}).second) return;
                    eg.edges.push_back({ru, rv, info});
                });
                return;
            }
            auto use = [&](const VertexSet& sel) {
                ls[i] = sel;
                self(self, i + 1);
            };
            if (i == 0)
                for_each_subset_with_first(qs[i], half, use);
            else
                for_each_subset(qs[i], half, use);
        };
        rec(rec, 0);
    }
    eg.rebuild_adjacency();
    g.graph = std::move(eg);
    return g;
}

std::vector<std::pair<KVertex, KEdgeInfo>> KGraph::neighbors_implicit(const KVertex& s) const {
    validate_kvertex(s, l, ground_size());
    std::vector<std::pair<KVertex, KEdgeInfo>> out;
    const Hypergraph& h = host.base;
    if (mode == Mode::EvenK) {
        const int half = h.k / 2;
        for (size_t ei = 0; ei < h.edges.size(); ++ei) {
            if ((int)intersection_size(s, h.edges[ei]) != half) continue;
            KEdgeInfo info;
            info.assoc = {(EdgeIndex)ei};
            info.colors = {(uint32_t)ei, 0};
            info.ncolors = 1;
            out.emplace_back(symmetric_difference(s, h.edges[ei]), std::move(info));
        }
    } else if (mode == Mode::OddK) {
        OddPre pre = odd_precompute(host, *decomposition);
        const int q = h.k - t;
        const int hi = (q + 1) / 2, lo = q / 2;
        for (size_t bi = 0; bi < pre.members.size(); ++bi) {
            const auto& mem = pre.members[bi];
            for (size_t ai = 0; ai < mem.size(); ++ai) {
                for (size_t bj = 0; bj < mem.size(); ++bj) {
                    if (ai == bj) continue;
                    int a1 = (int)intersection_size(s, pre.red[bi][ai]);
                    int b1 = (int)intersection_size(s, pre.blue[bi][bj]);
                    if (!((a1 == hi && b1 == lo) || (a1 == lo && b1 == hi))) continue;
                    VertexSet dset = concat_rb(pre.red[bi][ai], pre.blue[bi][bj]);
                    KEdgeInfo info;
                    info.assoc = {mem[ai], mem[bj]};
                    info.colors = {host.colors[mem[ai]], host.colors[mem[bj]]};
                    info.ncolors = 2;
                    out.emplace_back(symmetric_difference(s, dset), std::move(info));
                }
            }
        }
    } else {
        FlowerPre pre = flower_precompute(h, gadgets);
        const int half = (h.k - 1) / 2;
        std::set<KVertex> taken;
        for (size_t p = 0; p < pre.good_ids.size(); ++p) {
            bool match = true;
            for (const auto& q : pre.qs[p])
                if ((int)intersection_size(s, q) != half) {
                    match = false;
                    break;
                }
            if (!match) continue;
            KVertex tvx = symmetric_difference(s, pre.w[p]);
            if (!taken.insert(tvx).second) continue;  // earliest gadget keeps the edge
            out.emplace_back(std::move(tvx), flower_info(gadgets[pre.good_ids[p]]));
        }
    }
    return out;
}

std::vector<std::pair<KVertex, KEdgeInfo>> KGraph::neighbors(const KVertex& s) const {
    if (graph.has_value()) {
        validate_kvertex(s, l, ground_size());
        int64_t rank = (int64_t)colex_rank(s);
        std::vector<std::pair<KVertex, KEdgeInfo>> out;
        for (const auto& [nbr, eid] : graph->adj[(size_t)rank])
            out.emplace_back(colex_unrank((uint64_t)nbr, (uint32_t)l, ground_size()),
                             graph->edges[(size_t)eid].info);
        return out;
    }
    return neighbors_implicit(s);
}

ColorHypergraph build_Hc(const ColoredHypergraph& h, const BucketDecomposition& d,
                         uint32_t color) {
    check(h.is_colored(), "build_Hc: host must be colored");
    check(color < h.color_count(), "build_Hc: unknown color");
    const int k = h.base.k;
    const int q = k - d.t;
    const uint32_t n = (uint32_t)h.base.n;
    const int hi = (q + 1) / 2, lo = q / 2;
    std::vector<std::pair<int, int>> size_pairs;
    size_pairs.emplace_back(hi, lo);
    if (hi != lo) size_pairs.emplace_back(lo, hi);

    std::map<VertexSet, int64_t> mult;
    for (const auto& b : d.buckets) {
        for (EdgeIndex gi : b.members) {
            if (h.colors[gi] != color) continue;
            VertexSet ci = sorted_difference(h.base.edge(gi), b.core);
            for (EdgeIndex gj : b.members) {
                if (gj == gi) continue;
                VertexSet cj = sorted_difference(h.base.edge(gj), b.core);
                std::set<VertexSet> fs;  // per-pair F values
                for (auto [sa, sb] : size_pairs) {
                    // first item: F_red in C~, F_blue in C~'
                    for_each_subset(ci, sa, [&](const VertexSet& a) {
                        for_each_subset(cj, sb, [&](const VertexSet& bset) {
                            fs.insert(concat_rb(a, shift_blue(bset, n)));
                        });
                    });
                    // second item: F_red in C~', F_blue in C~
                    for_each_subset(cj, sa, [&](const VertexSet& a) {
                        for_each_subset(ci, sb, [&](const VertexSet& bset) {
                            fs.insert(concat_rb(a, shift_blue(bset, n)));
                        });
                    });
                }
                for (const auto& f : fs) ++mult[f];
            }
        }
    }

    ColorHypergraph hc;
    hc.color = color;
    hc.q = q;
    for (auto& [f, m] : mult) {
        hc.edges.emplace_back(f, m);
        hc.total += m;
    }
    return hc;
}

HcReport check_Hc_codegrees(const KGraph& g, const std::function<double(int)>& threshold_for_j) {
    check(g.mode == Mode::OddK, "check_Hc_codegrees: OddK mode required");
    check(g.decomposition.has_value(), "check_Hc_codegrees: missing decomposition");
    const int q = g.host.base.k - g.t;

    std::function<double(int)> thr = threshold_for_j;
    if (!thr) {
        KGraphStats st = kikuchi_stats(g);
        double x = st.avg_degree / (2000.0 * std::max(1.0, st.n_log2));
        double ratio = (double)g.host.base.n / (double)g.l;
        thr = [x, ratio, q](int j) { return x * std::pow(ratio, q - j); };
    }

    std::set<uint32_t> colors(g.host.colors.begin(), g.host.colors.end());
    HcReport rep;
    for (uint32_t c : colors) {
        ColorHypergraph hc = build_Hc(g.host, *g.decomposition, c);
        for (const auto& [f, fm] : hc.edges) {
            for (int j = 0; j <= q; ++j) {
                int64_t count = 0;
                for (const auto& [f2, m2] : hc.edges)
                    if ((int)intersection_size(f, f2) == j) count += m2;
                double t = thr(j);
                double ratio = t > 0 ? (double)count / t : (count > 0 ? HUGE_VAL : 0.0);
                ++rep.checked;
                if (ratio > rep.worst_ratio) {
                    rep.worst_ratio = ratio;
                    rep.worst = HcViolation{c, f, j, count, t};
                }
                if ((double)count > t) rep.pass = false;
            }
        }
    }
    return rep;
}

KGraph prune_heavy_colors(const KGraph& g, double threshold) {
    check(g.mode == Mode::OddK, "prune_heavy_colors: OddK mode required");
    check(g.graph.has_value(), "prune_heavy_colors: explicit backend required");
    if (threshold <= 0) {
        double n_log2 = g.log2_vertex_count();
        threshold = g.graph->average_degree() / (80.0 * std::max(1.0, n_log2));
    }
    KGraph out = g;
    out.graph = prune_heavy_colors_graph(*g.graph, threshold);
    out.pruned = true;
    return out;
}

std::vector<FlowerGadget> enumerate_flower_gadgets(const Hypergraph& h,
                                                   const std::vector<std::vector<EdgeIndex>>& ev,
                                                   const std::vector<uint8_t>& red_blue) {
    const int k = h.k;
    check(k % 2 == 1 && k >= 3, "flower gadgets: k must be odd, >= 3");
    check((int)ev.size() == h.n, "flower gadgets: ev must have one list per vertex");
    check(red_blue.size() == h.edges.size(), "flower gadgets: coloring size mismatch");

    {
        std::map<VertexSet, int> counts;
        for (const auto& e : h.edges)
            for_each_subset(e, k - 1, [&](const VertexSet& s) {
                check(++counts[s] <= 1, "flower gadgets: some (k-1)-set has codegree > 1");
            });
    }
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (Vertex v : e) ++deg[v];
    size_t delta = 0;
    bool first = true;
    std::vector<std::vector<EdgeIndex>> evs = ev;
    for (int v = 0; v < h.n; ++v) {
        if (deg[v] == 0) continue;
        if (first) {
            delta = evs[v].size();
            first = false;
        }
        check(evs[v].size() == delta, "flower gadgets: |E_v| must be uniform");
        std::sort(evs[v].begin(), evs[v].end());
        for (EdgeIndex e : evs[v])
            check(e >= 0 && e < h.edge_count() &&
                      std::binary_search(h.edges[e].begin(), h.edges[e].end(), (Vertex)v),
                  "flower gadgets: E_v edge must contain v");
    }

    std::vector<FlowerGadget> out;
    std::vector<EdgeIndex> petals(k);
    for (size_t ci = 0; ci < h.edges.size(); ++ci) {
        const VertexSet& c = h.edges[ci];
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                FlowerGadget g;
                g.center = (EdgeIndex)ci;
                g.petals = petals;
                g.good = red_blue[ci] == 1;
                for (int j = 0; j < k && g.good; ++j)
                    if (red_blue[petals[j]] != 0) g.good = false;
                out.push_back(std::move(g));
                return;
            }
            for (EdgeIndex p : evs[c[i]]) {
                if (p == (EdgeIndex)ci) continue;
                const VertexSet& pe = h.edges[p];
                if (intersection_size(pe, c) != 1) continue;
                bool disjoint = true;
                for (int j = 0; j < i && disjoint; ++j)
                    if (intersection_size(pe, h.edges[petals[j]]) != 0) disjoint = false;
                if (!disjoint) continue;
                petals[i] = p;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

RedBlueResult color_red_blue(const Hypergraph& h, const std::vector<std::vector<EdgeIndex>>& ev,
                             uint64_t seed, int max_retries) {
    std::vector<uint8_t> all_red(h.edges.size(), 0);
    std::vector<FlowerGadget> structural = enumerate_flower_gadgets(h, ev, all_red);
    RedBlueResult res;
    res.total = (int64_t)structural.size();
    res.colors = all_red;
    if (res.total == 0) return res;  // nothing to color toward

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(splitmix64(seed + (uint64_t)attempt));
        std::vector<uint8_t> colors(h.edges.size());
        for (auto& c : colors) c = rng.coin() ? 1 : 0;
        int64_t good = 0;
        for (const auto& g : structural) {
            if (colors[g.center] != 1) continue;
            bool ok = true;
            for (EdgeIndex p : g.petals)
                if (colors[p] != 0) {
                    ok = false;
                    break;
                }
            if (ok) ++good;
        }
        res.colors = std::move(colors);
        res.good = good;
        res.retries = attempt;
        if (((unsigned __int128)good << (h.k + 2)) >= (unsigned __int128)res.total) {
            res.ok = true;
            return res;
        }
    }
    return res;
}

KGraph flower_prune(const KGraph& g) {
    check(g.mode == Mode::Flower, "flower_prune: Flower mode required");
    check(g.graph.has_value(), "flower_prune: explicit backend required");
    KGraph out = g;
    out.graph = properize_graph(*g.graph);
    out.pruned = true;
    return out;
}

KGraphStats kikuchi_stats(const KGraph& g, int sample_size, uint64_t seed) {
    KGraphStats st;
    const uint32_t ground = g.ground_size();
    st.n_log2 = log2_binom(ground, (uint64_t)g.l);
    st.n_exact = binom(ground, (uint64_t)g.l);

    if (g.graph.has_value()) {
        st.edge_count = (double)g.graph->edges.size();
        st.avg_degree = g.graph->average_degree();
        st.exact = true;
    } else {
        st.exact = false;
        Rng rng(seed);
        double sum = 0, sumsq = 0;
        int nsamp = std::max(1, sample_size);
        std::vector<uint32_t> pool(ground);
        for (uint32_t i = 0; i < ground; ++i) pool[i] = i;
        for (int i = 0; i < nsamp; ++i) {
            for (int j = 0; j < g.l; ++j) {
                uint64_t pick = (uint64_t)j + rng.below((uint64_t)(ground - j));
                std::swap(pool[j], pool[pick]);
            }
            KVertex s(pool.begin(), pool.begin() + g.l);
            std::sort(s.begin(), s.end());
            double deg = (double)g.neighbors_implicit(s).size();
            sum += deg;
            sumsq += deg * deg;
        }
        double mean = sum / nsamp;
        double var = std::max(0.0, sumsq / nsamp - mean * mean);
        st.avg_degree = mean;
        st.std_error = std::sqrt(var / nsamp);
        st.edge_count = std::exp2(st.n_log2 + std::log2(std::max(mean, 0.0)) - 1.0);
        if (mean == 0) st.edge_count = 0;
    }

    const Hypergraph& h = g.host.base;
    const double l = (double)g.l;
    if (g.mode == Mode::EvenK) {
        if (h.edge_count() > 0) {
            st.bound_avg_degree =
                std::exp2(std::log2((double)h.edge_count()) + log2_binom(h.k, h.k / 2) +
                          log2_binom(h.n - h.k, (uint64_t)(l - h.k / 2.0)) -
                          log2_binom(h.n, (uint64_t)g.l));
        }
    } else if (g.mode == Mode::OddK) {
        int64_t ordered_pairs = 0;
        for (const auto& b : g.decomposition->buckets) {
            int64_t m = (int64_t)b.members.size();
            ordered_pairs += m * (m - 1);
        }
        const int q = h.k - g.t;
        if (ordered_pairs > 0 && g.l >= q) {
            st.bound_avg_degree =
                std::exp2(std::log2((double)ordered_pairs) + 2.0 * log2_binom(q, q / 2) +
                          log2_binom(2 * h.n - 2 * q, (uint64_t)(g.l - q)) -
                          log2_binom(2 * h.n, (uint64_t)g.l));
        }
    } else {
        int64_t good = 0;
        for (const auto& gad : g.gadgets)
            if (gad.good) ++good;
        const int k = h.k;
        if (good > 0 && g.l >= k * (k - 1) / 2) {
            st.bound_avg_degree =
                std::exp2(std::log2((double)good) +
                          log2_binom(h.n - k * (k - 1), (uint64_t)(g.l - k * (k - 1) / 2)) -
                          (double)k * k * k - log2_binom(h.n, (uint64_t)g.l));
        }
    }
    return st;
}

}  // namespace evencover::kikuchi
