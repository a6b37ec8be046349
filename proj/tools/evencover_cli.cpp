#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "evencover/cleaning.hpp"
#include "evencover/gf2.hpp"
#include "evencover/kikuchi.hpp"
#include "evencover/ldc.hpp"
#include "evencover/pipeline.hpp"
#include "evencover/serialize.hpp"
#include "evencover/walks.hpp"

using namespace evencover;
using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        check(f.good(), "cannot write " + out_path);
        f << j.dump(2) << "\n";
    }
}

int run_clean(const std::string& in, const std::string& op, int t, int m, int budget, int l,
              std::string out_prefix) {
    auto ch = load_hypergraph(in);
    const Hypergraph& h = ch.base;
    if (out_prefix.empty()) out_prefix = in + ".clean";

    cleaning::CleaningOutcome outcome;
    json sidecar;
    if (op == "min-degree-core") {
        auto core = cleaning::min_degree_core(h);
        outcome.kind = cleaning::OutcomeKind::MinDegreeCore;
        outcome.sub = core.sub;
        outcome.origin = core.origin;
        outcome.t = 1;
        outcome.degenerate = core.sub.edges.empty();
        sidecar["removedVertices"] = core.removed;
    } else if (op == "vertex-buckets") {
        outcome = cleaning::single_vertex_buckets(h);
    } else if (op == "prune-or-bucket") {
        outcome = cleaning::prune_or_bucket(h, t, m, budget);
    } else if (op == "low-codegree") {
        auto res = cleaning::low_codegree_reduct(h, l, budget);
        outcome = res.outcome;
        if (res.reduction) {
            sidecar["pairReduction"] = {{"j", res.reduction->j},
                                        {"gUniformity", res.reduction->g.k},
                                        {"gEdges", res.reduction->g.edge_count()}};
            store_hypergraph(ColoredHypergraph{res.reduction->g, {}, {}},
                             out_prefix + ".reduced.hg");
        }
    } else if (op == "multilevel") {
        const double d = (double)h.edge_count() / h.n;
        const int k = h.k;
        const double m1 = d / (10.0 * k);
        outcome = cleaning::multilevel_clean(h, [&](int r) {
            if (r <= 1) return m1;
            double expo = (k / 2.0 - r) / (k / 2.0 - 1.0);
            return std::pow(std::max(m1, 1e-9), expo) *
                   std::pow(std::max(std::log2((double)h.n), 1.0), 1.0 - 1.0 / (k + 1));
        });
    } else {
        throw std::invalid_argument("clean: unknown --op " + op);
    }

    ColoredHypergraph sub;
    sub.base = outcome.sub;
    if (ch.is_colored())
        for (EdgeIndex i : outcome.origin) sub.colors.push_back(ch.colors[i]);
    store_hypergraph(sub, out_prefix + ".hg");
    json j = outcome_to_json(outcome);
    for (auto& [key, val] : sidecar.items()) j[key] = val;
    emit(j, out_prefix + ".json");
    std::cout << out_prefix << ".hg\n" << out_prefix << ".json\n";
    return 0;
}

int run_kikuchi(const std::string& in, const std::string& mode, int l,
                const std::string& backend_name, bool stats, bool prune, int t, int m,
                int budget, int delta, uint64_t seed, const std::string& out_path) {
    auto ch = load_hypergraph(in);
    const Hypergraph& h = ch.base;
    kikuchi::Backend backend = backend_name == "implicit" ? kikuchi::Backend::Implicit
                                                          : kikuchi::Backend::Explicit;
    json j;
    kikuchi::KGraph g;
    if (mode == "evenk") {
        g = kikuchi::build_even_kikuchi(h, l, backend);
    } else if (mode == "oddk") {
        auto outcome = cleaning::prune_or_bucket(h, t, m, budget);
        check(outcome.kind == cleaning::OutcomeKind::Bucketed,
              "kikuchi: no (m,t)-bucket decomposition found; lower --m or --budget");
        ColoredHypergraph sub;
        sub.base = outcome.sub;
        if (ch.is_colored())
            for (EdgeIndex i : outcome.origin) sub.colors.push_back(ch.colors[i]);
        else
            sub = color_by_index(outcome.sub);
        g = kikuchi::build_odd_kikuchi(sub, *outcome.decomposition, l, backend);
        j["bucketed"] = {{"t", t}, {"m", m}, {"covered", outcome.decomposition->covered()}};
    } else if (mode == "flower") {
        auto core = cleaning::min_degree_core(h);
        std::vector<int> deg(core.sub.n, 0);
        for (const auto& e : core.sub.edges)
            for (Vertex v : e) ++deg[v];
        int dv = delta;
        if (dv <= 0) {
            dv = INT32_MAX;
            for (int v = 0; v < core.sub.n; ++v)
                if (deg[v] > 0) dv = std::min(dv, deg[v]);
            if (dv == INT32_MAX) dv = 1;
        }
        std::vector<std::vector<EdgeIndex>> ev(core.sub.n);
        for (int v = 0; v < core.sub.n; ++v) {
            if (deg[v] == 0) continue;
            check(deg[v] >= dv, "kikuchi: vertex degree below --delta after coring");
            for (size_t i = 0; i < core.sub.edges.size() && (int)ev[v].size() < dv; ++i)
                if (std::binary_search(core.sub.edges[i].begin(), core.sub.edges[i].end(),
                                       (Vertex)v))
                    ev[v].push_back((EdgeIndex)i);
        }
        auto rb = kikuchi::color_red_blue(core.sub, ev, seed);
        check(rb.ok, "kikuchi: red/blue coloring retries exhausted");
        auto gadgets = kikuchi::enumerate_flower_gadgets(core.sub, ev, rb.colors);
        g = kikuchi::build_flower_kikuchi(core.sub, gadgets, l, backend);
        j["flower"] = {{"delta", dv},
                       {"gadgets", rb.total},
                       {"good", rb.good},
                       {"retries", rb.retries}};
    } else {
        throw std::invalid_argument("kikuchi: unknown --mode " + mode);
    }

    if (prune) {
        check(g.graph.has_value(), "kikuchi: --prune needs the explicit backend");
        g = mode == "flower" ? kikuchi::flower_prune(g) : kikuchi::prune_heavy_colors(g, -1);
        j["prunedEdges"] = g.graph->edges.size();
    }
    if (stats || j.empty()) j["stats"] = stats_to_json(kikuchi::kikuchi_stats(g, 200, seed));
    emit(j, out_path);
    return 0;
}

int run_find_cover(const std::string& in, pipeline::PipelineOptions o,
                   const std::string& out_path) {
    auto ch = load_hypergraph(in);
    auto rep = pipeline::find_even_cover(ch.base, o);
    json j;
    j["route"] = rep.route;
    j["success"] = rep.success;
    if (rep.cover) {
        j["edges"] = rep.cover->edges;
        j["size"] = rep.cover->size();
        j["walkLength"] = rep.walk_length;
    }
    j["stats"] = rep.stats;
    emit(j, out_path);
    return rep.success ? 0 : 1;
}

int run_verify(const std::string& in, const std::string& cover_path) {
    auto ch = load_hypergraph(in);
    std::ifstream f(cover_path);
    check(f.good(), "cannot open " + cover_path);
    json j = json::parse(f);
    EvenCover c = cover_from_json(j);
    bool ok = verify_even_cover(ch.base, c);
    std::cout << (ok ? "valid" : "invalid") << (c.degenerate() ? " degenerate" : "") << "\n";
    return ok ? 0 : 1;
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
    auto cfg = pipeline::load_sweep_config(config_path);
    if (out_path.empty()) {
        pipeline::sweep(cfg, std::cout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        check(f.good(), "cannot write " + out_path);
        pipeline::sweep(cfg, f);
    }
    return 0;
}

int run_gen(int n, int k, int m, uint64_t seed, const std::string& model,
            const std::string& out_path) {
    auto h = pipeline::gen_random(n, k, m, seed, model);
    ColoredHypergraph ch{h, {}, {}};
    if (out_path.empty())
        std::cout << format_hypergraph(ch);
    else
        store_hypergraph(ch, out_path);
    return 0;
}

int run_ldc_normal_form(const std::string& in, const std::string& out_path) {
    auto code = ldc::load_generator(in);
    auto nf = ldc::normal_form(code);
    json j;
    j["n"] = code.n;
    j["m"] = code.m;
    if (code.distance) {
        j["distance"] = *code.distance;
        j["delta"] = nf.delta;
        j["matchingFloor"] = nf.matching_floor;
    }
    j["minMatching"] = nf.min_matching;
    j["tripleCounts"] = nf.triple_counts;
    json matchings = json::array();
    for (const auto& mt : nf.matchings) {
        json one = json::array();
        for (const auto& e : mt) one.push_back({e[0], e[1], e[2]});
        matchings.push_back(std::move(one));
    }
    j["matchings"] = std::move(matchings);
    j["floorSatisfied"] = nf.min_matching >= nf.matching_floor;
    emit(j, out_path);
    return 0;
}

int run_ldc_find_odd_cover(const std::string& in, ldc::OddCoverOptions o,
                           const std::string& out_path) {
    auto ch = load_hypergraph(in);
    auto res = ldc::find_odd_color_cover(ch, o);
    json j;
    j["success"] = res.cover.has_value();
    j["case"] = res.case_taken;
    j["densityOk"] = res.density_ok;
    j["pruneSkipped"] = res.prune_skipped;
    j["hcCheckPass"] = res.hc_check_pass;
    j["heavyThreshold"] = res.heavy_threshold;
    j["l"] = res.l_used;
    if (res.cover) {
        j["edges"] = res.cover->edges;
        j["size"] = res.cover->size();
        j["walkLength"] = res.walk_length;
        j["certificateColor"] = res.certificate_color;
    }
    emit(j, out_path);
    return res.cover ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"short even covers in k-uniform hypergraphs via subset graphs"};
    app.require_subcommand(1);

    std::string in, out, cover_path, config_path, op, mode = "evenk", backend = "explicit";
    std::string model = "simple";
    int t = 2, m = 2, budget = 0, l = 2, n = 10, k = 3, edges = 10, delta = 0;
    uint64_t seed = 1;
    int effort = 16, max_walk_len = -1, pair_budget = -1;
    double alpha = 1.0 / 3, kconst = -1, prune_threshold = -1;
    bool stats = false, prune = false, timing = false, no_fallback = false;
    std::string route = "auto";

    auto* clean = app.add_subcommand("clean", "hypergraph cleaning operations");
    clean->add_option("input", in)->required();
    clean->add_option("--op", op)->required();
    clean->add_option("--t", t);
    clean->add_option("--m", m);
    clean->add_option("--budget", budget);
    clean->add_option("--l", l);
    clean->add_option("--out", out);

    auto* kik = app.add_subcommand("kikuchi", "build subset graphs and report stats");
    kik->add_option("input", in)->required();
    kik->add_option("--mode", mode)->check(CLI::IsMember({"evenk", "oddk", "flower"}));
    kik->add_option("--l", l);
    kik->add_option("--backend", backend)->check(CLI::IsMember({"explicit", "implicit"}));
    kik->add_flag("--stats", stats);
    kik->add_flag("--prune", prune);
    kik->add_option("--t", t);
    kik->add_option("--m", m);
    kik->add_option("--budget", budget);
    kik->add_option("--delta", delta);
    kik->add_option("--seed", seed);
    kik->add_option("--out", out);

    auto* fc = app.add_subcommand("find-cover", "full pipeline: clean, build, walk, extract");
    fc->add_option("input", in)->required();
    fc->add_option("--l", l);
    fc->add_option("--seed", seed);
    fc->add_option("--effort", effort);
    fc->add_option("--route", route)->check(CLI::IsMember({"auto", "evenk", "oddk", "flower"}));
    fc->add_option("--max-walk-len", max_walk_len);
    fc->add_option("--pair-budget", pair_budget);
    fc->add_option("--flower-delta", delta);
    fc->add_option("--prune-threshold", prune_threshold);
    fc->add_flag("--timing", timing);
    fc->add_flag("--no-fallback", no_fallback);
    fc->add_option("--out", out);

    auto* ver = app.add_subcommand("verify", "check a cover against a hypergraph");
    ver->add_option("input", in)->required();
    ver->add_option("--cover", cover_path)->required();

    auto* sw = app.add_subcommand("sweep", "grid experiments to CSV");
    sw->add_option("--config", config_path)->required();
    sw->add_option("--out", out);

    auto* gen = app.add_subcommand("gen", "seeded random instances");
    gen->add_option("--n", n)->required();
    gen->add_option("--k", k)->required();
    gen->add_option("--m", edges)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--model", model)->check(CLI::IsMember({"simple", "multi"}));
    gen->add_option("--out", out);

    auto* ldc_cmd = app.add_subcommand("ldc", "3-query linear code machinery");
    ldc_cmd->require_subcommand(1);
    auto* nf = ldc_cmd->add_subcommand("normal-form", "decoding matchings from a generator");
    nf->add_option("input", in)->required();
    nf->add_option("--out", out);
    auto* oc = ldc_cmd->add_subcommand("find-odd-cover", "even cover with a unique color");
    oc->add_option("input", in)->required();
    oc->add_option("--alpha", alpha);
    oc->add_option("--K", kconst);
    oc->add_option("--l", l);
    oc->add_option("--seed", seed);
    oc->add_option("--effort", effort);
    oc->add_option("--max-walk-len", max_walk_len);
    oc->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(clean)) return run_clean(in, op, t, m, budget, l, out);
        if (app.got_subcommand(kik))
            return run_kikuchi(in, mode, l, backend, stats, prune, t, m, budget, delta, seed,
                               out);
        if (app.got_subcommand(fc)) {
            pipeline::PipelineOptions o;
            o.l = l;
            o.seed = seed;
            o.effort = effort;
            o.route = route;
            o.max_walk_len = max_walk_len;
            o.pair_budget = pair_budget;
            o.flower_delta = delta > 0 ? delta : -1;
            o.prune_threshold = prune_threshold;
            o.collect_timing = timing;
            o.allow_fallback = !no_fallback;
            return run_find_cover(in, o, out);
        }
        if (app.got_subcommand(ver)) return run_verify(in, cover_path);
        if (app.got_subcommand(sw)) return run_sweep(config_path, out);
        if (app.got_subcommand(gen)) return run_gen(n, k, edges, seed, model, out);
        if (app.got_subcommand(ldc_cmd)) {
            if (ldc_cmd->got_subcommand(nf)) return run_ldc_normal_form(in, out);
            ldc::OddCoverOptions o;
            o.alpha = alpha;
            o.k_const = kconst;
            o.l = l;
            o.seed = seed;
            o.effort = effort;
            o.max_walk_len = max_walk_len;
            return run_ldc_find_odd_cover(in, o, out);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
