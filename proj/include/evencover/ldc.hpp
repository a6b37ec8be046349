#pragma once

#include <array>
#include <filesystem>
#include <optional>

#include "evencover/gf2.hpp"
#include "evencover/hypergraph.hpp"

namespace evencover::ldc {

// Linear code given by generator rows: codeword bit j of message x is
// <rows[j], x> over GF(2).
struct LinearCode {
    int m = 0;  // message length
    int n = 0;  // block length
    std::vector<gf2::GF2Vector> rows;
    std::optional<int> distance;  // exact, filled when m <= 16
};

LinearCode make_code(int m, std::vector<gf2::GF2Vector> rows);
int exact_distance(const LinearCode& c);  // guard: m <= 16

LinearCode hadamard_code(int r);  // guard: r <= 12

// .gm format: line 1 "n m", then n lines of m characters in {0,1}.
LinearCode load_generator(const std::filesystem::path& path);
void store_generator(const LinearCode& c, const std::filesystem::path& path);

// Per message bit, a maximal greedy matching of 3-subsets whose row sum is
// the unit vector of that bit; the union is colored by bit index.
struct NormalFormLDC {
    std::vector<std::vector<std::array<int, 3>>> matchings;
    ColoredHypergraph union_h;  // 3-uniform multi-hypergraph, color = bit
    int min_matching = 0;
    double delta = 0;        // distance / n (0 when distance unknown)
    int matching_floor = 0;  // ceil(delta*n/6)
    std::vector<int64_t> triple_counts;  // all valid triples per bit
};

// Rejects (throws) when some bit admits no triple at all.
NormalFormLDC normal_form(const LinearCode& c);

// True iff every color class contributes an even count to the cover
// (cover indices refer to union_h).
bool check_even_contribution(const NormalFormLDC& nf, const EvenCover& cover);

struct OddCoverOptions {
    double alpha = 1.0 / 3;
    double k_const = -1;  // default 1e7 / alpha^2
    int l = -1;           // default ceil(n^(1/3))
    uint64_t seed = 1;
    int effort = 16;
    int max_walk_len = -1;
    double prune_threshold = -1;  // default d(G)/(80 log2 v(G)); skipped when < 1
};

struct OddCoverResult {
    std::optional<EvenCover> cover;  // indices into the input hypergraph
    int32_t certificate_color = -1;  // appears an odd number of times in the cover
    int case_taken = 0;        // 1: heavy-pair buckets; 2: vertex buckets
    bool density_ok = false;   // every color class has >= alpha*n edges
    bool prune_skipped = false;
    bool hc_check_pass = false;
    double hc_worst_ratio = 0;
    int walk_length = 0;
    double avg_degree = 0;
    int l_used = 0;
    int bucket_m = 0;         // effective heavy-pair threshold (capped at e+1)
    double heavy_threshold = 0;  // raw ceil(K log2 n)
};

// Case split on a (ceil(K log2 n), 2) bucket extraction; either route builds
// the bipartite subset graph, checks color-hypergraph codegrees, prunes heavy
// colors and searches for a unique-color closed walk.
OddCoverResult find_odd_color_cover(const ColoredHypergraph& h, const OddCoverOptions& o);

}  // namespace evencover::ldc
