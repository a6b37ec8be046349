#include "evencover/walks.hpp"

#include <cmath>
#include <deque>
#include <unordered_map>

namespace evencover::walks {

using kikuchi::EdgeColoredGraph;
using kikuchi::KEdgeInfo;
using kikuchi::KGraph;
using kikuchi::KVertex;

namespace {

std::vector<uint32_t> info_colors(const KEdgeInfo& info) {
    std::vector<uint32_t> c;
    c.push_back(info.colors[0]);
    if (info.ncolors == 2) c.push_back(info.colors[1]);
    return c;
}

// merged sorted colors, or nullopt if any repeats (rainbow violation)
std::optional<std::vector<uint32_t>> merge_colors(const std::vector<uint32_t>& path,
                                                  const KEdgeInfo& info) {
    std::vector<uint32_t> add = info_colors(info);
    if (add.size() == 2 && add[0] == add[1]) return std::nullopt;
    for (uint32_t c : add)
        if (std::binary_search(path.begin(), path.end(), c)) return std::nullopt;
    std::vector<uint32_t> out = path;
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    return out;
}

void finalize(ClosedWalk& w) {
    w.color_multiplicity = walk_color_multiplicities(w);
}

}  // namespace

std::vector<uint32_t> RainbowPath::colors() const {
    std::vector<uint32_t> out;
    for (const auto& e : edges)
        for (uint32_t c : info_colors(e.info)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool RainbowPath::chained() const {
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].v != edges[i + 1].u) return false;
    return true;
}

bool RainbowPath::rainbow() const {
    if (!chained()) return false;
    auto c = colors();
    return std::adjacent_find(c.begin(), c.end()) == c.end();
}

ClosedWalk splice_paths(const RainbowPath& to_target, const RainbowPath& back) {
    ClosedWalk walk;
    walk.edges = to_target.edges;
    for (auto rit = back.edges.rbegin(); rit != back.edges.rend(); ++rit) {
        WalkEdge e = *rit;
        std::swap(e.u, e.v);
        walk.edges.push_back(std::move(e));
    }
    finalize(walk);
    std::vector<uint32_t> a = to_target.colors(), b = back.colors();
    std::vector<uint32_t> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    walk.unique_color = -1;
    for (uint32_t c : diff)
        if (walk.color_multiplicity[c] == 1) {
            walk.unique_color = (int32_t)c;
            break;
        }
    return walk;
}

namespace {

template <typename Driver>
std::optional<ClosedWalk> rainbow_search(const Driver& d, int depth_max, const WalkOptions& o) {
    using Key = typename Driver::Key;
    struct Rec {
        Key parent;
        KEdgeInfo via;
        std::vector<uint32_t> colors;
        int depth = 0;
        bool is_start = false;
    };

    Rng rng(o.seed);
    for (int attempt = 0; attempt < o.effort; ++attempt) {
        Key start = d.sample_start(rng);
        std::unordered_map<Key, Rec, typename Driver::Hash> rec;
        rec[start] = Rec{start, {}, {}, 0, true};
        std::deque<Key> queue{start};
        int64_t visited = 1;
        std::optional<ClosedWalk> found;

        auto chain = [&](Key x) {
            std::vector<WalkEdge> path;
            while (!rec[x].is_start) {
                const Rec& r = rec[x];
                path.push_back(WalkEdge{d.materialize(r.parent), d.materialize(x), r.via});
                x = r.parent;
            }
            std::reverse(path.begin(), path.end());
            return path;
        };

        while (!queue.empty() && !found) {
            Key u = queue.front();
            queue.pop_front();
            const int du = rec[u].depth;
            const std::vector<uint32_t> ucolors = rec[u].colors;  // copy: rec may rehash
            d.for_each_neighbor(u, [&](const Key& w, const KEdgeInfo& info) {
                if (found) return;
                auto merged = merge_colors(ucolors, info);
                if (!merged) return;
                auto it = rec.find(w);
                if (it == rec.end()) {
                    if (visited >= o.visit_budget) return;
                    ++visited;
                    rec[w] = Rec{u, info, *merged, du + 1, false};
                    if (du + 1 < depth_max) queue.push_back(w);
                    return;
                }
                if (it->second.is_start ? merged->empty() : it->second.colors == *merged) return;
                // two rainbow paths to w with different color sets: splice
                RainbowPath fwd{chain(u)};
                fwd.edges.push_back(WalkEdge{d.materialize(u), d.materialize(w), info});
                RainbowPath back{chain(w)};
                ClosedWalk walk = splice_paths(fwd, back);
                if (walk.unique_color < 0) return;
                found = std::move(walk);
            });
        }
        if (found) return found;
    }
    return std::nullopt;
}

struct RankDriver {
    using Key = int64_t;
    using Hash = std::hash<int64_t>;
    const EdgeColoredGraph* g;
    std::function<KVertex(int64_t)> mat;

    Key sample_start(Rng& rng) const { return (int64_t)rng.below((uint64_t)g->num_vertices); }
    template <typename Fn>
    void for_each_neighbor(const Key& u, Fn&& fn) const {
        for (const auto& [v, eid] : g->adj[(size_t)u]) fn(v, g->edges[(size_t)eid].info);
    }
    KVertex materialize(const Key& k) const { return mat(k); }
};

struct SubsetDriver {
    using Key = KVertex;
    using Hash = VecHash;
    const KGraph* g;

    Key sample_start(Rng& rng) const {
        uint32_t ground = g->ground_size();
        std::vector<uint32_t> pool(ground);
        for (uint32_t i = 0; i < ground; ++i) pool[i] = i;
        for (int j = 0; j < g->l; ++j) {
            uint64_t pick = (uint64_t)j + rng.below((uint64_t)(ground - j));
            std::swap(pool[(size_t)j], pool[(size_t)pick]);
        }
        KVertex s(pool.begin(), pool.begin() + g->l);
        std::sort(s.begin(), s.end());
        return s;
    }
    template <typename Fn>
    void for_each_neighbor(const Key& u, Fn&& fn) const {
        for (auto& [v, info] : g->neighbors(u)) fn(v, info);
    }
    KVertex materialize(const Key& k) const { return k; }
};

int default_max_len(double log2_n) {
    int il = std::max(1, (int)std::ceil(log2_n - 1e-9));
    return 2 * il;
}

std::optional<ClosedWalk> exhaustive_impl(const EdgeColoredGraph& g, int max_len, bool shortest,
                                          const std::function<KVertex(int64_t)>& mat) {
    if (max_len < 2) return std::nullopt;
    std::optional<ClosedWalk> best;

    std::vector<int> dist((size_t)g.num_vertices);
    std::vector<std::pair<int64_t, int32_t>> par((size_t)g.num_vertices);

    for (size_t eid = 0; eid < g.edges.size(); ++eid) {
        const auto& e = g.edges[eid];
        for (int ci = 0; ci < e.info.ncolors; ++ci) {
            if (ci == 1 && e.info.colors[1] == e.info.colors[0]) continue;
            uint32_t c = e.info.colors[ci];
            // shortest u-v path avoiding color c, bounded depth
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int64_t> queue{e.v};
            dist[(size_t)e.v] = 0;
            bool hit = false;
            while (!queue.empty() && !hit) {
                int64_t x = queue.front();
                queue.pop_front();
                if (dist[(size_t)x] >= max_len - 1) continue;
                for (const auto& [y, yid] : g.adj[(size_t)x]) {
                    const auto& ye = g.edges[(size_t)yid];
                    bool carries = false;
                    for (int d2 = 0; d2 < ye.info.ncolors; ++d2)
                        if (ye.info.colors[d2] == c) carries = true;
                    if (carries) continue;
                    if (dist[(size_t)y] != -1) continue;
                    dist[(size_t)y] = dist[(size_t)x] + 1;
                    par[(size_t)y] = {x, yid};
                    if (y == e.u) {
                        hit = true;
                        break;
                    }
                    queue.push_back(y);
                }
            }
            if (dist[(size_t)e.u] < 0) continue;
            int len = dist[(size_t)e.u] + 1;
            if (best && best->length() <= len) continue;
            ClosedWalk walk;
            walk.edges.push_back(WalkEdge{mat(e.u), mat(e.v), e.info});
            std::vector<WalkEdge> path;
            int64_t x = e.u;
            while (x != e.v) {
                auto [prev, pid] = par[(size_t)x];
                path.push_back(WalkEdge{mat(prev), mat(x), g.edges[(size_t)pid].info});
                x = prev;
            }
            std::reverse(path.begin(), path.end());
            for (auto& we : path) walk.edges.push_back(std::move(we));
            finalize(walk);
            walk.unique_color = (int32_t)c;
            if (!shortest) return walk;
            best = std::move(walk);
        }
    }
    return best;
}

}  // namespace

std::map<uint32_t, int> walk_color_multiplicities(const ClosedWalk& w) {
    std::map<uint32_t, int> m;
    for (const auto& e : w.edges)
        for (uint32_t c : info_colors(e.info)) ++m[c];
    return m;
}

std::optional<ClosedWalk> find_unique_color_walk(const KGraph& g, const WalkOptions& o) {
    WalkOptions opt = o;
    if (opt.max_len <= 0) opt.max_len = default_max_len(g.log2_vertex_count());
    const int depth_max = std::max(1, opt.max_len / 2);

    std::optional<ClosedWalk> found;
    if (g.graph.has_value()) {
        if (g.graph->num_vertices == 0 || g.graph->edges.empty()) return std::nullopt;
        const uint32_t ground = g.ground_size();
        const int l = g.l;
        auto mat = [ground, l](int64_t r) {
            return colex_unrank((uint64_t)r, (uint32_t)l, ground);
        };
        RankDriver d{&*g.graph, mat};
        found = rainbow_search(d, depth_max, opt);
        if (!found && opt.allow_fallback && g.graph->num_vertices <= opt.fallback_vertex_limit) {
            bool shortest = (int64_t)g.graph->edges.size() <= opt.fallback_shortest_edge_limit;
            found = exhaustive_impl(*g.graph, opt.max_len, shortest, mat);
        }
    } else {
        SubsetDriver d{&g};
        found = rainbow_search(d, depth_max, opt);
    }
    return found;
}

std::optional<ClosedWalk> find_unique_color_walk(const EdgeColoredGraph& g, const WalkOptions& o) {
    if (g.num_vertices == 0 || g.edges.empty()) return std::nullopt;
    WalkOptions opt = o;
    if (opt.max_len <= 0)
        opt.max_len = default_max_len(std::log2((double)std::max<int64_t>(g.num_vertices, 2)));
    const int depth_max = std::max(1, opt.max_len / 2);
    auto mat = [](int64_t r) { return KVertex{(uint32_t)r}; };
    RankDriver d{&g, mat};
    auto found = rainbow_search(d, depth_max, opt);
    if (!found && opt.allow_fallback && g.num_vertices <= opt.fallback_vertex_limit) {
        bool shortest = (int64_t)g.edges.size() <= opt.fallback_shortest_edge_limit;
        found = exhaustive_impl(g, opt.max_len, shortest, mat);
    }
    return found;
}

std::optional<ClosedWalk> exhaustive_unique_color_walk(const EdgeColoredGraph& g, int max_len,
                                                       bool shortest) {
    auto mat = [](int64_t r) { return KVertex{(uint32_t)r}; };
    return exhaustive_impl(g, max_len, shortest, mat);
}

EvenCover cover_from_walk(const ClosedWalk& w) {
    std::map<EdgeIndex, int> count;
    for (const auto& e : w.edges)
        for (EdgeIndex i : e.info.assoc) ++count[i];
    EvenCover c;
    for (auto [i, m] : count)
        if (m % 2 == 1) c.edges.push_back(i);
    return c;
}

EvenCover extract_even_cover(const KGraph& g, const ClosedWalk& w) {
    check(!w.edges.empty(), "extract_even_cover: empty walk");
    EvenCover c = cover_from_walk(w);
    check(verify_even_cover(g.host.base, c), "extract_even_cover: malformed walk");
    return c;
}

bool verify_walk(const KGraph& g, const ClosedWalk& w) {
    if (w.edges.empty()) return false;
    const size_t len = w.edges.size();
    for (size_t i = 0; i < len; ++i) {
        if (w.edges[i].v != w.edges[(i + 1) % len].u) return false;
        bool ok = false;
        for (const auto& [t, info] : g.neighbors(w.edges[i].u)) {
            if (t == w.edges[i].v && info == w.edges[i].info) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    if (walk_color_multiplicities(w) != w.color_multiplicity) return false;
    if (w.unique_color >= 0) {
        auto it = w.color_multiplicity.find((uint32_t)w.unique_color);
        if (it == w.color_multiplicity.end() || it->second != 1) return false;
    }
    return true;
}

}  // namespace evencover::walks
