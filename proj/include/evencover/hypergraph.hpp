#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evencover/util.hpp"

namespace evencover {

// k-uniform hypergraph on vertices [0,n). Edges are sorted vertex sets and are
// identified by index, so multi-hypergraphs (repeated edges) work natively.
struct Hypergraph {
    int n = 0;
    int k = 0;
    bool multi = false;
    std::vector<VertexSet> edges;

    static Hypergraph create(int n, int k, std::vector<VertexSet> edges, bool multi = false);

    int edge_count() const { return (int)edges.size(); }
    const VertexSet& edge(EdgeIndex i) const;
    std::vector<int> degrees() const;

    bool operator==(const Hypergraph&) const = default;
};

struct ColoredHypergraph {
    Hypergraph base;
    std::vector<uint32_t> colors;            // per-edge color id; empty => uncolored
    std::vector<std::string> color_labels;   // optional side table, id -> label

    bool is_colored() const { return !colors.empty(); }
    uint32_t color_count() const;

    bool operator==(const ColoredHypergraph&) const = default;
};

// No vertex lies in two edges of the same color.
bool properly_colored(const ColoredHypergraph& h);

// Colors every edge with its own index (used where each edge is its own color class).
ColoredHypergraph color_by_index(const Hypergraph& h);

// Elements in exactly one of a, b; sorted.
VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);

// Edge index set (sub-multiset via distinct indices) whose GF(2) sum is zero.
struct EvenCover {
    std::vector<EdgeIndex> edges;  // sorted, distinct

    bool degenerate() const { return edges.empty(); }
    int size() const { return (int)edges.size(); }

    bool operator==(const EvenCover&) const = default;
};

// True iff the XOR of all member edges is empty. The empty cover verifies but
// is degenerate; callers needing a nonempty cover must check that flag.
bool verify_even_cover(const Hypergraph& h, const EvenCover& c);

// Number of edges containing s; codegree of the empty set is e(h).
int codegree(const Hypergraph& h, const VertexSet& s);

struct Bucket {
    VertexSet core;                   // the common vertex set X
    std::vector<EdgeIndex> members;   // edges all containing core
};

struct BucketDecomposition {
    std::vector<Bucket> buckets;
    int m = 0;  // edges per bucket
    int t = 0;  // core size

    int covered() const;
};

// Buckets pairwise edge-disjoint, every member contains its core, sizes (m,t).
bool valid_decomposition(const Hypergraph& h, const BucketDecomposition& d);

// Sub-hypergraph on the given edge indices (same vertex range). Second member
// of the result maps new edge index -> index in h.
std::pair<Hypergraph, std::vector<EdgeIndex>> sub_hypergraph(const Hypergraph& h,
                                                             const std::vector<EdgeIndex>& keep);

// .hg text format; see README. Round trip is bit exact for stored files.
ColoredHypergraph load_hypergraph(const std::filesystem::path& path);
void store_hypergraph(const ColoredHypergraph& h, const std::filesystem::path& path);
ColoredHypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const ColoredHypergraph& h);

}  // namespace evencover
