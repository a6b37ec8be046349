#include <doctest.h>

#include <filesystem>
#include <map>

#include "evencover/gf2.hpp"
#include "evencover/ldc.hpp"

using namespace evencover;
using namespace evencover::ldc;

namespace {

// union of `colors` random perfect matchings of triples: properly colored by
// construction, every class has floor(n/3) edges
ColoredHypergraph random_matching_union(int n, int colors, uint64_t seed) {
    Rng rng(seed);
    std::vector<VertexSet> edges;
    std::vector<uint32_t> cols;
    for (int c = 0; c < colors; ++c) {
        std::vector<uint32_t> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = (uint32_t)i;
        for (int i = n - 1; i > 0; --i) {
            uint64_t j = rng.below((uint64_t)(i + 1));
            std::swap(perm[i], perm[j]);
        }
        for (int i = 0; i + 2 < n; i += 3) {
            VertexSet e{perm[i], perm[i + 1], perm[i + 2]};
            std::sort(e.begin(), e.end());
            edges.push_back(e);
            cols.push_back((uint32_t)c);
        }
    }
    ColoredHypergraph ch;
    ch.base = Hypergraph::create(n, 3, std::move(edges), true);
    ch.colors = std::move(cols);
    return ch;
}

}  // namespace

TEST_CASE("hadamard codes") {
    auto c1 = hadamard_code(1);
    CHECK(c1.n == 2);
    CHECK(c1.rows[0].is_zero());
    CHECK(c1.rows[1].get(0));
    auto c3 = hadamard_code(3);
    CHECK(c3.m == 3);
    CHECK(c3.n == 8);
    REQUIRE(c3.distance.has_value());
    CHECK(*c3.distance == 4);  // delta = 1/2
    CHECK_THROWS(hadamard_code(13));
}

TEST_CASE("generator file round trip") {
    auto c = hadamard_code(3);
    auto path = std::filesystem::temp_directory_path() / "ec_test.gm";
    store_generator(c, path);
    auto back = load_generator(path);
    CHECK(back.n == c.n);
    CHECK(back.m == c.m);
    CHECK(back.rows == c.rows);
    CHECK(back.distance == c.distance);
    std::filesystem::remove(path);
}

TEST_CASE("normal form of the r=3 Hadamard code") {
    auto c = hadamard_code(3);
    auto nf = normal_form(c);
    REQUIRE(nf.matchings.size() == 3);
    // each unit target admits exactly 7 triples (a projective-plane structure,
    // so the triples pairwise intersect and every maximal matching has size 1)
    for (int64_t t : nf.triple_counts) CHECK(t == 7);
    for (const auto& m : nf.matchings) CHECK(m.size() == 1);
    CHECK(nf.min_matching == 1);
    CHECK(nf.matching_floor == 1);  // ceil(0.5 * 8 / 6)
    CHECK(nf.min_matching >= nf.matching_floor);
    // row-sum identity rechecked independently
    for (size_t i = 0; i < nf.matchings.size(); ++i) {
        for (const auto& e : nf.matchings[i]) {
            gf2::GF2Vector sum = c.rows[e[0]];
            sum ^= c.rows[e[1]];
            sum ^= c.rows[e[2]];
            gf2::GF2Vector unit((size_t)c.m);
            unit.set(i, true);
            CHECK(sum == unit);
        }
    }
    CHECK(properly_colored(nf.union_h));
}

TEST_CASE("normal form rejects codes without decoding triples") {
    // every row equals e_1: no triple can sum to e_0
    std::vector<gf2::GF2Vector> rows;
    for (int i = 0; i < 4; ++i) {
        gf2::GF2Vector v(2);
        v.set(1, true);
        rows.push_back(v);
    }
    auto c = make_code(2, std::move(rows));
    CHECK_THROWS(normal_form(c));
}

TEST_CASE("even contribution law") {
    SUBCASE("brute-forced covers of the Hadamard union all satisfy it") {
        auto nf = normal_form(hadamard_code(3));
        auto covers = gf2::enumerate_even_covers(nf.union_h.base, 6);
        for (const auto& cv : covers) CHECK(check_even_contribution(nf, cv));
    }
    SUBCASE("duplicate same-color triples count evenly") {
        NormalFormLDC nf;
        nf.union_h.base = Hypergraph::create(3, 3, {{0, 1, 2}, {0, 1, 2}}, true);
        nf.union_h.colors = {0, 0};
        CHECK(check_even_contribution(nf, EvenCover{{0, 1}}));
    }
    SUBCASE("a coloring violating the decoding identity admits a counterexample") {
        // same triple under two colors: the pair is an even cover but each
        // color contributes once
        NormalFormLDC nf;
        nf.union_h.base = Hypergraph::create(3, 3, {{0, 1, 2}, {0, 1, 2}}, true);
        nf.union_h.colors = {0, 1};
        auto covers = gf2::enumerate_even_covers(nf.union_h.base, 6);
        REQUIRE(covers.size() == 1);
        CHECK_FALSE(check_even_contribution(nf, covers[0]));
    }
}

TEST_CASE("find_odd_color_cover") {
    SUBCASE("dense matching unions yield verifying covers with odd certificates") {
        int successes = 0;
        for (uint64_t seed = 0; seed < 10; ++seed) {
            auto ch = random_matching_union(15, 30, seed);
            OddCoverOptions o;
            o.seed = seed + 1;
            o.alpha = 0.2;
            auto res = find_odd_color_cover(ch, o);
            if (!res.cover) continue;
            ++successes;
            CHECK(verify_even_cover(ch.base, *res.cover));
            int cnt = 0;
            for (EdgeIndex i : res.cover->edges)
                if (ch.colors[i] == (uint32_t)res.certificate_color) ++cnt;
            CHECK(cnt % 2 == 1);
            CHECK(res.walk_length > 0);
        }
        CHECK(successes > 0);
    }
    SUBCASE("sparse instances return none without error") {
        auto ch = random_matching_union(9, 2, 4);
        OddCoverOptions o;
        o.seed = 1;
        auto res = find_odd_color_cover(ch, o);
        CHECK_FALSE(res.cover.has_value());
    }
    SUBCASE("default K follows alpha") {
        auto ch = random_matching_union(9, 2, 4);
        OddCoverOptions o;
        o.alpha = 0.5;
        auto res = find_odd_color_cover(ch, o);
        // bucket threshold ceil(K log2 n) with K = 1e7/alpha^2 = 4e7
        CHECK(res.heavy_threshold >= 4e7 * std::log2(9.0) * 0.99);
        CHECK(res.bucket_m <= ch.base.edge_count() + 1);
    }
    SUBCASE("density flag reflects the alpha*n floor") {
        auto ch = random_matching_union(15, 3, 2);  // classes of size 5
        OddCoverOptions lo, hi;
        lo.alpha = 0.3;  // 4.5 <= 5
        hi.alpha = 0.5;  // 7.5 > 5
        CHECK(find_odd_color_cover(ch, lo).density_ok);
        CHECK_FALSE(find_odd_color_cover(ch, hi).density_ok);
    }
    SUBCASE("rejects improper colorings") {
        ColoredHypergraph ch;
        ch.base = Hypergraph::create(5, 3, {{0, 1, 2}, {0, 1, 3}});
        ch.colors = {0, 0};
        CHECK_THROWS(find_odd_color_cover(ch, {}));
    }
}
