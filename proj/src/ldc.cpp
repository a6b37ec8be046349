#include "evencover/ldc.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "evencover/cleaning.hpp"
#include "evencover/walks.hpp"

namespace evencover::ldc {

LinearCode make_code(int m, std::vector<gf2::GF2Vector> rows) {
    check(m >= 1, "code: message length must be >= 1");
    for (const auto& r : rows) check((int)r.size() == m, "code: row length != m");
    LinearCode c;
    c.m = m;
    c.n = (int)rows.size();
    c.rows = std::move(rows);
    if (m <= 16) c.distance = exact_distance(c);
    return c;
}

int exact_distance(const LinearCode& c) {
    check(c.m <= 16, "exact_distance: guard m <= 16");
    std::vector<uint32_t> masks(c.n, 0);
    for (int j = 0; j < c.n; ++j)
        for (int b = 0; b < c.m; ++b)
            if (c.rows[j].get(b)) masks[j] |= 1u << b;
    int best = c.n + 1;
    for (uint32_t x = 1; x < (1u << c.m); ++x) {
        int wt = 0;
        for (int j = 0; j < c.n; ++j) wt += std::popcount(masks[j] & x) & 1;
        best = std::min(best, wt);
    }
    return best;
}

LinearCode hadamard_code(int r) {
    check(r >= 1 && r <= 12, "hadamard_code: guard 1 <= r <= 12");
    std::vector<gf2::GF2Vector> rows;
    for (uint32_t a = 0; a < (1u << r); ++a) {
        gf2::GF2Vector v((size_t)r);
        for (int b = 0; b < r; ++b)
            if ((a >> b) & 1) v.set(b, true);
        rows.push_back(std::move(v));
    }
    return make_code(r, std::move(rows));
}

LinearCode load_generator(const std::filesystem::path& path) {
    std::ifstream f(path);
    check(f.good(), "gm: cannot open " + path.string());
    int n = -1, m = -1;
    check(bool(f >> n >> m), "gm: malformed header");
    check(n >= 1 && m >= 1, "gm: bad dimensions");
    std::vector<gf2::GF2Vector> rows;
    std::string line;
    std::getline(f, line);
    for (int j = 0; j < n; ++j) {
        check(bool(std::getline(f, line)), "gm: missing row");
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        check((int)line.size() == m, "gm: row length != m");
        gf2::GF2Vector v((size_t)m);
        for (int b = 0; b < m; ++b) {
            check(line[b] == '0' || line[b] == '1', "gm: row must be over {0,1}");
            if (line[b] == '1') v.set(b, true);
        }
        rows.push_back(std::move(v));
    }
    return make_code(m, std::move(rows));
}

void store_generator(const LinearCode& c, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    check(f.good(), "gm: cannot write " + path.string());
    f << c.n << ' ' << c.m << '\n';
    for (const auto& r : c.rows) {
        for (int b = 0; b < c.m; ++b) f << (r.get(b) ? '1' : '0');
        f << '\n';
    }
}

NormalFormLDC normal_form(const LinearCode& c) {
    check(c.n <= (1 << 16), "normal_form: guard n <= 2^16");
    // pair-sum index: row value -> sorted row indices
    std::map<VertexSet, std::vector<int>> by_value;
    for (int j = 0; j < c.n; ++j) by_value[c.rows[j].support()].push_back(j);

    NormalFormLDC nf;
    std::vector<VertexSet> union_edges;
    std::vector<uint32_t> union_colors;

    for (int i = 0; i < c.m; ++i) {
        gf2::GF2Vector unit((size_t)c.m);
        unit.set(i, true);
        std::vector<std::array<int, 3>> triples;
        for (int j1 = 0; j1 < c.n; ++j1) {
            for (int j2 = j1 + 1; j2 < c.n; ++j2) {
                gf2::GF2Vector target = c.rows[j1];
                target ^= c.rows[j2];
                target ^= unit;
                auto it = by_value.find(target.support());
                if (it == by_value.end()) continue;
                for (int j3 : it->second)
                    if (j3 > j2) triples.push_back({j1, j2, j3});
            }
        }
        nf.triple_counts.push_back((int64_t)triples.size());
        if (triples.empty())
            throw std::runtime_error(
                "normal_form: message bit " + std::to_string(i) +
                " has no decoding triple; code rejected (not 3-query decodable in normal form)");
        // greedy maximal matching, lowest indices first
        std::vector<char> used(c.n, 0);
        std::vector<std::array<int, 3>> matching;
        for (const auto& t : triples) {
            if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
            used[t[0]] = used[t[1]] = used[t[2]] = 1;
            matching.push_back(t);
            union_edges.push_back({(Vertex)t[0], (Vertex)t[1], (Vertex)t[2]});
            union_colors.push_back((uint32_t)i);
        }
        nf.matchings.push_back(std::move(matching));
    }

    nf.min_matching = (int)nf.matchings[0].size();
    for (const auto& m : nf.matchings) nf.min_matching = std::min(nf.min_matching, (int)m.size());
    nf.union_h.base = Hypergraph::create(c.n, 3, std::move(union_edges), /*multi=*/true);
    nf.union_h.colors = std::move(union_colors);
    if (c.distance) {
        nf.delta = (double)*c.distance / (double)c.n;
        nf.matching_floor = (int)std::ceil(nf.delta * c.n / 6.0 - 1e-9);
    }
    return nf;
}

bool check_even_contribution(const NormalFormLDC& nf, const EvenCover& cover) {
    std::map<uint32_t, int> per_color;
    for (EdgeIndex i : cover.edges) {
        check(i >= 0 && i < nf.union_h.base.edge_count(),
              "check_even_contribution: cover index out of range");
        ++per_color[nf.union_h.colors[i]];
    }
    for (auto [c, cnt] : per_color)
        if (cnt % 2 != 0) return false;
    return true;
}

namespace {

std::vector<uint32_t> map_colors(const ColoredHypergraph& h, const std::vector<EdgeIndex>& origin) {
    std::vector<uint32_t> out;
    out.reserve(origin.size());
    for (EdgeIndex i : origin) out.push_back(h.colors[i]);
    return out;
}

}  // namespace

OddCoverResult find_odd_color_cover(const ColoredHypergraph& h, const OddCoverOptions& o) {
    check(h.base.k == 3, "find_odd_color_cover: hypergraph must be 3-uniform");
    check(h.is_colored() && properly_colored(h), "find_odd_color_cover: improper coloring");
    const int n = h.base.n;
    const int e = h.base.edge_count();

    OddCoverResult res;
    const double alpha = o.alpha;
    const double kc = o.k_const > 0 ? o.k_const : 1e7 / (alpha * alpha);
    res.l_used = o.l > 0 ? o.l : std::max(1, (int)std::ceil(std::cbrt((double)n)));

    {
        std::map<uint32_t, int> class_size;
        for (uint32_t c : h.colors) ++class_size[c];
        res.density_ok = !class_size.empty();
        for (auto [c, s] : class_size)
            if ((double)s < alpha * n) res.density_ok = false;
    }
    if (e < 2) return res;

    // thresholds above e(h) never fire; capping avoids overflow for tiny alpha
    double heavy_raw = std::ceil(kc * std::max(1.0, std::log2((double)n)) - 1e-9);
    res.heavy_threshold = heavy_raw;
    const int m_heavy = (int)std::max(1.0, std::min(heavy_raw, (double)e + 1.0));
    res.bucket_m = m_heavy;
    cleaning::CleaningOutcome first =
        cleaning::prune_or_bucket(h.base, 2, m_heavy, (e + 1) / 2);

    ColoredHypergraph built;
    BucketDecomposition dec;
    std::vector<EdgeIndex> origin;  // built edge -> input edge
    if (first.kind == cleaning::OutcomeKind::Bucketed) {
        res.case_taken = 1;
        built.base = first.sub;
        built.colors = map_colors(h, first.origin);
        dec = *first.decomposition;
        origin = first.origin;
    } else {
        res.case_taken = 2;
        if (first.sub.edge_count() < 2) return res;
        cleaning::CleaningOutcome second = cleaning::single_vertex_buckets(first.sub);
        origin.reserve(second.origin.size());
        for (EdgeIndex i : second.origin) origin.push_back(first.origin[i]);
        built.base = second.sub;
        built.colors = map_colors(h, origin);
        dec = *second.decomposition;
    }
    if (built.base.edge_count() == 0) return res;

    const int t = dec.t;
    const int l = std::max(res.l_used, h.base.k - t);
    res.l_used = l;
    bool use_explicit = binom(2ull * (uint64_t)n, (uint64_t)l) <= kikuchi::kExplicitGuard;
    kikuchi::KGraph kg = kikuchi::build_odd_kikuchi(
        built, dec, l, use_explicit ? kikuchi::Backend::Explicit : kikuchi::Backend::Implicit);

    kikuchi::HcReport hc = kikuchi::check_Hc_codegrees(kg);
    res.hc_check_pass = hc.pass;
    res.hc_worst_ratio = hc.worst_ratio;

    if (use_explicit) {
        res.avg_degree = kg.graph->average_degree();
        double thr = o.prune_threshold > 0
                         ? o.prune_threshold
                         : res.avg_degree / (80.0 * std::max(1.0, kg.log2_vertex_count()));
        // a sub-unit threshold would delete every edge; that regime is
        // unreachable at this scale, so the pass is skipped and flagged
        if (thr >= 1.0)
            kg = kikuchi::prune_heavy_colors(kg, thr);
        else
            res.prune_skipped = true;
    } else {
        res.prune_skipped = true;
    }

    walks::WalkOptions wo;
    wo.seed = o.seed;
    wo.effort = o.effort;
    wo.max_len = o.max_walk_len;
    auto walk = walks::find_unique_color_walk(kg, wo);
    if (!walk) return res;

    EvenCover sub_cover = walks::extract_even_cover(kg, *walk);
    EvenCover cover;
    for (EdgeIndex i : sub_cover.edges) cover.edges.push_back(origin[i]);
    std::sort(cover.edges.begin(), cover.edges.end());
    check(verify_even_cover(h.base, cover), "find_odd_color_cover: lifted cover must verify");

    res.walk_length = walk->length();
    res.certificate_color = walk->unique_color;
    int cert_count = 0;
    for (EdgeIndex i : cover.edges)
        if (h.colors[i] == (uint32_t)res.certificate_color) ++cert_count;
    if (res.certificate_color < 0 || cert_count % 2 == 0)
        throw std::logic_error("find_odd_color_cover: certificate color count must be odd");
    res.cover = std::move(cover);
    return res;
}

}  // namespace evencover::ldc
