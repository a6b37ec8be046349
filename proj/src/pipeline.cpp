#include "evencover/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "evencover/cleaning.hpp"
#include "evencover/gf2.hpp"
#include "evencover/kikuchi.hpp"
#include "evencover/walks.hpp"

namespace evencover::pipeline {

using kikuchi::Backend;
using kikuchi::KGraph;

namespace {

std::vector<EdgeIndex> compose_origin(const std::vector<EdgeIndex>& outer,
                                      const std::vector<EdgeIndex>& inner) {
    std::vector<EdgeIndex> out;
    out.reserve(inner.size());
    for (EdgeIndex i : inner) out.push_back(outer[i]);
    return out;
}

EvenCover map_cover(const EvenCover& c, const std::vector<EdgeIndex>& origin) {
    EvenCover out;
    for (EdgeIndex i : c.edges) out.edges.push_back(origin[i]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Backend pick_backend(uint64_t ground, int l) {
    return binom(ground, (uint64_t)l) <= kikuchi::kExplicitGuard ? Backend::Explicit
                                                                 : Backend::Implicit;
}

struct RouteResult {
    std::optional<EvenCover> cover;  // indices into the hypergraph handed to the route
    int walk_length = 0;
    int certificate_mult = 0;  // multiplicity of the walk's certified color
};

walks::WalkOptions walk_options(const PipelineOptions& o) {
    walks::WalkOptions wo;
    wo.seed = o.seed;
    wo.effort = o.effort;
    wo.max_len = o.max_walk_len;
    return wo;
}

RouteResult run_even_route(const Hypergraph& h, int l, const PipelineOptions& o,
                           nlohmann::json& stats) {
    l = std::max(l, h.k / 2);
    Backend backend = pick_backend((uint64_t)h.n, l);
    KGraph kg = kikuchi::build_even_kikuchi(h, l, backend);
    kikuchi::KGraphStats st = kikuchi::kikuchi_stats(kg, 64, o.seed);
    stats["evenk"] = {{"l", l},
                      {"explicit", backend == Backend::Explicit},
                      {"avg_degree", st.avg_degree},
                      {"log2_vertices", st.n_log2}};
    RouteResult rr;
    auto walk = walks::find_unique_color_walk(kg, walk_options(o));
    if (!walk) return rr;
    rr.cover = walks::extract_even_cover(kg, *walk);
    rr.walk_length = walk->length();
    if (walk->unique_color >= 0)
        rr.certificate_mult = walk->color_multiplicity.at((uint32_t)walk->unique_color);
    return rr;
}

// t >= 1 bipartite route on a hypergraph whose decomposition is attached
RouteResult run_oddk_route(const Hypergraph& h0, const BucketDecomposition& dec, int l,
                           const PipelineOptions& o, nlohmann::json& stats) {
    ColoredHypergraph ch = color_by_index(h0);
    l = std::max(l, h0.k - dec.t);
    Backend backend = pick_backend(2ull * (uint64_t)h0.n, l);
    KGraph kg = kikuchi::build_odd_kikuchi(ch, dec, l, backend);

    kikuchi::HcReport hc = kikuchi::check_Hc_codegrees(kg);
    nlohmann::json j = {{"l", l},
                        {"t", dec.t},
                        {"bucket_m", dec.m},
                        {"explicit", backend == Backend::Explicit},
                        {"hc_pass", hc.pass},
                        {"hc_worst_ratio", hc.worst_ratio}};
    bool prune_skipped = true;
    if (backend == Backend::Explicit) {
        double d = kg.graph->average_degree();
        j["avg_degree"] = d;
        double thr = o.prune_threshold > 0
                         ? o.prune_threshold
                         : d / (80.0 * std::max(1.0, kg.log2_vertex_count()));
        j["prune_threshold"] = thr;
        if (thr >= 1.0) {
            kg = kikuchi::prune_heavy_colors(kg, thr);
            prune_skipped = false;
            j["pruned_avg_degree"] = kg.graph->average_degree();
        }
    }
    j["prune_skipped"] = prune_skipped;
    stats["oddk"] = std::move(j);

    RouteResult rr;
    auto walk = walks::find_unique_color_walk(kg, walk_options(o));
    if (!walk) return rr;
    rr.cover = walks::extract_even_cover(kg, *walk);
    rr.walk_length = walk->length();
    if (walk->unique_color >= 0)
        rr.certificate_mult = walk->color_multiplicity.at((uint32_t)walk->unique_color);
    return rr;
}

RouteResult run_flower_route(const Hypergraph& h0, double m1, const PipelineOptions& o,
                             nlohmann::json& stats) {
    const int k = h0.k;
    nlohmann::json j;
    RouteResult rr;

    int delta = o.flower_delta > 0 ? o.flower_delta : std::max(1, (int)std::ceil(m1 - 1e-9));
    std::vector<int> deg(h0.n, 0);
    for (const auto& e : h0.edges)
        for (Vertex v : e) ++deg[v];
    std::vector<std::vector<EdgeIndex>> ev(h0.n);
    for (int v = 0; v < h0.n; ++v) {
        if (deg[v] == 0) continue;
        if (deg[v] < delta) {
            j["failed"] = "vertex degree below E_v size";
            stats["flower"] = std::move(j);
            return rr;
        }
        for (size_t i = 0; i < h0.edges.size() && (int)ev[v].size() < delta; ++i)
            if (std::binary_search(h0.edges[i].begin(), h0.edges[i].end(), (Vertex)v))
                ev[v].push_back((EdgeIndex)i);
    }
    j["delta"] = delta;

    kikuchi::RedBlueResult rb = kikuchi::color_red_blue(h0, ev, o.seed);
    j["gadgets_total"] = rb.total;
    j["gadgets_good"] = rb.good;
    j["color_retries"] = rb.retries;
    if (!rb.ok) {
        j["failed"] = "red/blue retries exhausted";
        stats["flower"] = std::move(j);
        return rr;
    }
    auto gadgets = kikuchi::enumerate_flower_gadgets(h0, ev, rb.colors);

    int l = std::max(o.l, k * (k - 1) / 2);
    if (l > h0.n) {
        j["failed"] = "l exceeds n";
        stats["flower"] = std::move(j);
        return rr;
    }
    j["l"] = l;
    Backend backend = pick_backend((uint64_t)h0.n, l);
    KGraph kg = kikuchi::build_flower_kikuchi(h0, gadgets, l, backend);
    if (backend == Backend::Explicit) {
        j["avg_degree"] = kg.graph->average_degree();
        kg = kikuchi::flower_prune(kg);
        j["pruned_avg_degree"] = kg.graph->average_degree();
    }
    j["explicit"] = backend == Backend::Explicit;
    stats["flower"] = std::move(j);

    auto walk = walks::find_unique_color_walk(kg, walk_options(o));
    if (!walk) return rr;
    rr.cover = walks::extract_even_cover(kg, *walk);
    rr.walk_length = walk->length();
    if (walk->unique_color >= 0)
        rr.certificate_mult = walk->color_multiplicity.at((uint32_t)walk->unique_color);
    return rr;
}

}  // namespace

PipelineReport find_even_cover(const Hypergraph& h, const PipelineOptions& o) {
    auto t0 = std::chrono::steady_clock::now();
    PipelineReport rep;
    const int n = h.n, k = h.k, e = h.edge_count();
    const double d = n > 0 ? (double)e / n : 0;
    rep.stats["n"] = n;
    rep.stats["k"] = k;
    rep.stats["e"] = e;
    rep.stats["l"] = o.l;
    rep.stats["d"] = d;

    if (o.allow_fallback && e >= 1) {
        // guaranteed to exist at e >= n+1; cheap enough to attempt always
        auto dep = gf2::find_dependency(h);
        if (dep && verify_even_cover(h, *dep)) {
            rep.baseline = dep;
            rep.stats["baseline_size"] = dep->size();
        }
    }

    std::string route = o.route;
    if (route == "auto") route = (k % 2 == 0) ? "evenk" : "odd-auto";
    check(route == "evenk" || route == "oddk" || route == "flower" || route == "odd-auto",
          "pipeline: unknown route " + o.route);

    // regime flags: the l window where the odd pipeline hands t = 1 to the
    // bipartite graph instead of the flower graph, and the density threshold
    // C n (n/l)^(k/2-1) log n with C = 10^k k^(k/2-1)
    const double log2n = std::max(std::log2((double)std::max(n, 2)), 1.0);
    const double regime_lo = n / (log2n * log2n);
    const double regime_hi = n / (100.0 * log2n);
    const bool oddk_detour = (double)o.l >= regime_lo && (double)o.l <= regime_hi;
    {
        double c_const = std::pow(10.0, k) * std::pow((double)k, k / 2.0 - 1.0);
        double required = c_const * n * std::pow((double)n / std::max(o.l, 1), k / 2.0 - 1.0) *
                          log2n;
        rep.stats["preconditions"] = {
            {"l_regime", (double)o.l < regime_lo  ? "flower"
                         : oddk_detour            ? "oddk-detour"
                                                  : "linear-algebra"},
            {"edges_required", required},
            {"edges_threshold_met", (double)e >= required}};
    }

    RouteResult rr;
    std::vector<EdgeIndex> origin;  // route hypergraph -> input
    auto guarded = [&rep](auto&& fn) -> RouteResult {
        try {
            return fn();
        } catch (const std::exception& ex) {
            rep.stats["route_error"] = ex.what();
            return RouteResult{};
        }
    };
    if (route == "evenk") {
        check(k % 2 == 0, "pipeline: evenk route needs even k");
        rep.route = "EvenK";
        rr = guarded([&] { return run_even_route(h, o.l, o, rep.stats); });
        origin.resize(h.edges.size());
        for (size_t i = 0; i < h.edges.size(); ++i) origin[i] = (EdgeIndex)i;
    } else {
        check(k % 2 == 1, "pipeline: odd routes need odd k");
        const int budget = o.pair_budget >= 0 ? o.pair_budget : (e + 1) / 2;
        rep.stats["pair_budget"] = budget;
        cleaning::LowCodegreeResult lc;
        bool lc_ok = true;
        try {
            lc = cleaning::low_codegree_reduct(h, o.l, budget);
        } catch (const std::exception& ex) {
            // identical edges inside a bucket reject the pair reduction;
            // continue on the uncleaned hypergraph and let the baseline answer
            lc_ok = false;
            rep.stats["low_codegree_error"] = ex.what();
        }
        if (lc_ok && lc.reduction.has_value() && route != "oddk" && route != "flower") {
            rep.route = "PairReduced";
            const cleaning::PairReduction& pr = *lc.reduction;
            rep.stats["pair_reduced"] = {{"j", pr.j},
                                         {"g_uniformity", pr.g.k},
                                         {"g_edges", pr.g.edge_count()}};
            rr = guarded([&] { return run_even_route(pr.g, std::max(o.l, pr.g.k / 2), o, rep.stats); });
            if (rr.cover) {
                EvenCover lifted = cleaning::lift_cover(pr, *rr.cover);
                rr.cover = map_cover(lifted, lc.outcome.origin);
            }
            origin.resize(h.edges.size());
            for (size_t i = 0; i < h.edges.size(); ++i) origin[i] = (EdgeIndex)i;
        } else {
            // forced odd routes (and a rejected reduction) keep h intact
            const bool pruned = lc_ok && !lc.reduction.has_value();
            const Hypergraph& h1 = pruned ? lc.outcome.sub : h;
            std::vector<EdgeIndex> o1;
            if (pruned) {
                o1 = lc.outcome.origin;
            } else {
                o1.resize(h.edges.size());
                for (size_t i = 0; i < h.edges.size(); ++i) o1[i] = (EdgeIndex)i;
            }
            rep.stats["low_codegree_kept"] = h1.edge_count();
            if (h1.edge_count() == 0) {
                rep.route = "None";
            } else {
                const double d1 = (double)h1.edge_count() / n;
                const double m1 = d1 / (10.0 * k);
                auto m_fn = [&](int t) -> double {
                    if (t <= 1) return m1;
                    double expo = (k / 2.0 - t) / (k / 2.0 - 1.0);
                    return std::pow(m1, expo) *
                           std::pow(std::max(std::log2((double)n), 1.0), 1.0 - 1.0 / (k + 1));
                };
                cleaning::CleaningOutcome mc = cleaning::multilevel_clean(h1, m_fn);
                origin = compose_origin(o1, mc.origin);
                rep.stats["multilevel"] = {{"t", mc.t},
                                           {"kept", mc.sub.edge_count()},
                                           {"m1", m1}};
                if (mc.degenerate) {
                    rep.route = "None";
                } else if (mc.kind == cleaning::OutcomeKind::Bucketed && route != "flower") {
                    rep.route = "OddK-t>1";
                    rr = guarded(
                        [&] { return run_oddk_route(mc.sub, *mc.decomposition, o.l, o, rep.stats); });
                } else if (route == "oddk" || (route == "odd-auto" && oddk_detour)) {
                    // bipartite route at t = 1: forced, or l sits in the window
                    // where the flower bound does not apply
                    if (mc.sub.edge_count() >= 2) {
                        cleaning::CleaningOutcome svb = cleaning::single_vertex_buckets(mc.sub);
                        origin = compose_origin(origin, svb.origin);
                        rep.route = "OddK-t1";
                        rr = guarded([&] {
                            return run_oddk_route(svb.sub, *svb.decomposition, o.l, o, rep.stats);
                        });
                    }
                } else {
                    rep.route = "OddK-flower";
                    rr = guarded([&] { return run_flower_route(mc.sub, m_fn(1), o, rep.stats); });
                }
            }
        }
    }

    if (rr.cover) {
        rep.cover = map_cover(*rr.cover, origin);
        rep.walk_length = rr.walk_length;
        check(verify_even_cover(h, *rep.cover), "pipeline: lifted cover must verify");
        check(!rep.cover->degenerate(), "pipeline: degenerate cover");
        rep.success = true;
        rep.stats["cover_size"] = rep.cover->size();
        rep.stats["walk_length"] = rep.walk_length;
        rep.stats["walk_certificate_multiplicity"] = rr.certificate_mult;
    } else if (rep.baseline && o.allow_fallback) {
        rep.route = "LinearAlgebraFallback";
        rep.cover = rep.baseline;
        rep.success = true;
        rep.stats["cover_size"] = rep.cover->size();
    }

    if (o.collect_timing) {
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                t0)
                          .count();
        rep.stats["wall_ms"] = rep.wall_ms;
    }
    return rep;
}

Hypergraph gen_random(int n, int k, int m, uint64_t seed, const std::string& model) {
    check(n >= k && k >= 1 && m >= 0, "gen_random: bad parameters");
    check(model == "simple" || model == "multi", "gen_random: model must be simple|multi");
    if (model == "simple")
        check((uint64_t)m <= binom((uint64_t)n, (uint64_t)k), "gen_random: m > C(n,k)");

    Rng rng(seed);
    std::vector<uint32_t> pool(n);
    auto draw = [&]() {
        for (int i = 0; i < n; ++i) pool[i] = (uint32_t)i;
        for (int j = 0; j < k; ++j) {
            uint64_t pick = (uint64_t)j + rng.below((uint64_t)(n - j));
            std::swap(pool[j], pool[pick]);
        }
        VertexSet e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        return e;
    };

    std::vector<VertexSet> edges;
    if (model == "simple") {
        std::set<VertexSet> seen;
        while ((int)edges.size() < m) {
            VertexSet e = draw();
            if (seen.insert(e).second) edges.push_back(std::move(e));
        }
        return Hypergraph::create(n, k, std::move(edges), false);
    }
    for (int i = 0; i < m; ++i) edges.push_back(draw());
    return Hypergraph::create(n, k, std::move(edges), true);
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& x : out) {
        size_t a = x.find_first_not_of(" \t");
        size_t b = x.find_last_not_of(" \t");
        x = a == std::string::npos ? "" : x.substr(a, b - a + 1);
    }
    return out;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string val = line.substr(eq + 1);
        auto items = split_list(val);
        auto ints = [&]() {
            std::vector<int> v;
            for (const auto& it : items)
                if (!it.empty()) v.push_back(std::stoi(it));
            return v;
        };
        if (key == "n")
            cfg.n = ints();
        else if (key == "k")
            cfg.k = ints();
        else if (key == "m")
            cfg.m = ints();
        else if (key == "l")
            cfg.l = ints();
        else if (key == "seeds") {
            for (const auto& it : items)
                if (!it.empty()) cfg.seeds.push_back((uint64_t)std::stoull(it));
        } else if (key == "model")
            cfg.model = items[0];
        else if (key == "route")
            cfg.route = items[0];
        else if (key == "effort")
            cfg.effort = std::stoi(items[0]);
        else if (key == "max_walk_len")
            cfg.max_walk_len = std::stoi(items[0]);
        else if (key == "timing")
            cfg.timing = items[0] == "on" || items[0] == "true";
        else
            check(false, "sweep config: unknown key '" + key + "'");
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream f(path);
    check(f.good(), "sweep config: cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_sweep_config(ss.str());
}

void sweep(const SweepConfig& cfg, std::ostream& csv) {
    csv << "n,k,m,l,seed,route,success,coverSize,walkLen,oracleMin,ms\n";
    for (int n : cfg.n) {
        for (int k : cfg.k) {
            for (int m : cfg.m) {
                for (int l : cfg.l) {
                    for (uint64_t seed : cfg.seeds) {
                        csv << n << ',' << k << ',' << m << ',' << l << ',' << seed << ',';
                        Hypergraph h;
                        try {
                            h = gen_random(n, k, m, seed, cfg.model);
                        } catch (const std::exception&) {
                            csv << "guard-violated,0,,,,\n";
                            continue;
                        }
                        PipelineOptions po;
                        po.l = l;
                        po.seed = seed;
                        po.effort = cfg.effort;
                        po.route = cfg.route;
                        po.max_walk_len = cfg.max_walk_len;
                        po.collect_timing = cfg.timing;
                        PipelineReport rep;
                        try {
                            rep = find_even_cover(h, po);
                        } catch (const std::exception&) {
                            csv << "guard-violated,0,,,,\n";
                            continue;
                        }
                        csv << rep.route << ',' << (rep.success ? 1 : 0) << ',';
                        if (rep.cover) csv << rep.cover->size();
                        csv << ',';
                        if (rep.walk_length > 0) csv << rep.walk_length;
                        csv << ',';
                        if (h.edge_count() <= 24) {
                            auto oracle = gf2::min_weight_cover_bruteforce(h, h.edge_count());
                            if (oracle) csv << oracle->size();
                        }
                        csv << ',';
                        if (cfg.timing) csv << (long long)rep.wall_ms;
                        csv << '\n';
                    }
                }
            }
        }
    }
}

}  // namespace evencover::pipeline
