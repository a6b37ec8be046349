#pragma once

#include <array>
#include <functional>
#include <optional>

#include "evencover/hypergraph.hpp"

namespace evencover::kikuchi {

enum class Mode { EvenK, OddK, Flower };
enum class Backend { Explicit, Implicit };

// l-subset of the ground set: [0,n) for EvenK/Flower, [0,2n) for OddK with
// red v -> v and blue v -> n+v.
using KVertex = std::vector<uint32_t>;

struct KEdgeInfo {
    std::vector<EdgeIndex> assoc;   // EvenK: {E}; OddK: {C, C'}; Flower: {C, P_1..P_k}
    std::array<uint32_t, 2> colors = {0, 0};
    int ncolors = 1;

    bool operator==(const KEdgeInfo&) const = default;
};

struct ExplicitEdge {
    int64_t u = 0, v = 0;  // colex ranks
    KEdgeInfo info;
};

// Materialized edge-colored multigraph; also usable standalone (walk search
// and the pruning passes operate on this layer).
struct EdgeColoredGraph {
    int64_t num_vertices = 0;
    std::vector<ExplicitEdge> edges;
    std::vector<std::vector<std::pair<int64_t, int32_t>>> adj;  // vertex -> (nbr, edge id)

    void rebuild_adjacency();
    double average_degree() const {
        return num_vertices ? 2.0 * (double)edges.size() / (double)num_vertices : 0.0;
    }
};

// Drop every edge with an endpoint whose (vertex,color) incidence count on
// the input graph exceeds the threshold for one of the edge's colors.
EdgeColoredGraph prune_heavy_colors_graph(const EdgeColoredGraph& g, double threshold);

// Drop every edge with >= 2 same-colored edges at an endpoint (computed on
// the input); the result is properly edge-colored.
EdgeColoredGraph properize_graph(const EdgeColoredGraph& g);

bool graph_properly_colored(const EdgeColoredGraph& g);

struct FlowerGadget {
    EdgeIndex center = -1;
    std::vector<EdgeIndex> petals;  // aligned with the sorted center vertices
    bool good = false;

    bool operator==(const FlowerGadget&) const = default;
};

constexpr uint64_t kExplicitGuard = 1000000;

struct KGraph {
    Mode mode = Mode::EvenK;
    Backend backend = Backend::Implicit;
    ColoredHypergraph host;
    int l = 0;
    int t = 0;                                          // OddK core size
    std::optional<BucketDecomposition> decomposition;   // OddK, indices into host
    std::vector<FlowerGadget> gadgets;                  // Flower, good flags set
    std::optional<EdgeColoredGraph> graph;              // Explicit backend
    bool pruned = false;

    uint32_t ground_size() const {
        return mode == Mode::OddK ? 2u * (uint32_t)host.base.n : (uint32_t)host.base.n;
    }
    uint64_t vertex_count() const { return binom(ground_size(), l); }
    double log2_vertex_count() const { return log2_binom(ground_size(), l); }

    // Neighbor enumeration with generating records, deterministic order.
    // Explicit graphs answer from adjacency (so pruning is respected),
    // implicit ones enumerate from the host structures.
    std::vector<std::pair<KVertex, KEdgeInfo>> neighbors(const KVertex& s) const;

    // Implicit-route enumeration regardless of backend (backend agreement).
    std::vector<std::pair<KVertex, KEdgeInfo>> neighbors_implicit(const KVertex& s) const;
};

KGraph build_even_kikuchi(const Hypergraph& h, int l, Backend backend);

KGraph build_odd_kikuchi(const ColoredHypergraph& h, const BucketDecomposition& d, int l,
                         Backend backend);

struct ColorHypergraph {
    uint32_t color = 0;
    int q = 0;  // uniformity k - t, over ground [0,2n)
    std::vector<std::pair<VertexSet, int64_t>> edges;  // distinct F with multiplicity
    int64_t total = 0;                                 // multiset size
};

ColorHypergraph build_Hc(const ColoredHypergraph& h, const BucketDecomposition& d,
                         uint32_t color);

struct HcViolation {
    uint32_t color = 0;
    VertexSet f;
    int j = 0;
    int64_t count = 0;
    double threshold = 0;
};

struct HcReport {
    bool pass = true;
    double worst_ratio = 0;  // max count/threshold seen
    std::optional<HcViolation> worst;
    int64_t checked = 0;
};

// Counts, for every color c, F in H_c and overlap j, the edges F' in H_c with
// |F' cap F| = j against threshold(j); default (d(G)/2000 log2 v(G))*(n/l)^(q-j).
HcReport check_Hc_codegrees(const KGraph& g,
                            const std::function<double(int)>& threshold_for_j = nullptr);

// Single pass with counts from the original graph; threshold <= 0 selects the
// default d(G)/(80 log2 v(G)). OddK + Explicit only.
KGraph prune_heavy_colors(const KGraph& g, double threshold = -1);

// All (C, P_1..P_k) with pairwise-disjoint petals, P_i in ev[v_i] and
// P_i cap C = {v_i}; good iff the center is blue and every petal red.
// Requires every (k-1)-set to have codegree <= 1 and |ev[v]| uniform.
std::vector<FlowerGadget> enumerate_flower_gadgets(const Hypergraph& h,
                                                   const std::vector<std::vector<EdgeIndex>>& ev,
                                                   const std::vector<uint8_t>& red_blue);

struct RedBlueResult {
    std::vector<uint8_t> colors;  // 0 = red, 1 = blue
    int64_t good = 0;
    int64_t total = 0;
    int retries = 0;
    bool ok = false;
};

// Uniform seeded red/blue coloring, retried with derived seeds until the good
// gadget count reaches total/2^(k+2); gives up after max_retries.
RedBlueResult color_red_blue(const Hypergraph& h, const std::vector<std::vector<EdgeIndex>>& ev,
                             uint64_t seed, int max_retries = 64);

KGraph build_flower_kikuchi(const Hypergraph& h, const std::vector<FlowerGadget>& gadgets,
                            int l, Backend backend);

KGraph flower_prune(const KGraph& g);

struct KGraphStats {
    double n_log2 = 0;
    uint64_t n_exact = 0;  // saturating
    double edge_count = 0;
    double avg_degree = 0;
    double bound_avg_degree = 0;  // closed-form lower bound for this mode
    bool exact = true;
    double std_error = 0;  // of the sampled mean degree (implicit only)
};

KGraphStats kikuchi_stats(const KGraph& g, int sample_size = 200, uint64_t seed = 1);

}  // namespace evencover::kikuchi
