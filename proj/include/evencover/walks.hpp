#pragma once

#include <map>
#include <optional>

#include "evencover/kikuchi.hpp"

namespace evencover::walks {

struct WalkEdge {
    kikuchi::KVertex u, v;  // traversal orientation
    kikuchi::KEdgeInfo info;

    bool operator==(const WalkEdge&) const = default;
};

// Open edge sequence in which no color repeats; each edge contributes its
// whole color set to the multiset.
struct RainbowPath {
    std::vector<WalkEdge> edges;  // edges[i].v == edges[i+1].u

    std::vector<uint32_t> colors() const;  // sorted color multiset
    bool chained() const;
    bool rainbow() const;  // chained and free of repeated colors
};

// Cyclic edge sequence: edges[i].v == edges[i+1].u, wrapping around.
struct ClosedWalk {
    std::vector<WalkEdge> edges;
    std::map<uint32_t, int> color_multiplicity;
    int32_t unique_color = -1;  // certified color of multiplicity 1, -1 if none

    int length() const { return (int)edges.size(); }
};

// Two rainbow paths between the same endpoints with different color sets
// close into a walk; any color in the set difference appears exactly once.
ClosedWalk splice_paths(const RainbowPath& to_target, const RainbowPath& back);

std::map<uint32_t, int> walk_color_multiplicities(const ClosedWalk& w);

struct WalkOptions {
    int max_len = -1;  // default 2*ceil(log2 N); hard cap, longer walks are never returned
    uint64_t seed = 1;
    int effort = 16;                 // rainbow-search start vertices
    int64_t visit_budget = 200000;   // per-start record cap
    bool allow_fallback = true;
    int64_t fallback_vertex_limit = 50000;
    int64_t fallback_shortest_edge_limit = 20000;  // below this, fallback returns a shortest walk
};

// Seeded rainbow breadth-first exploration: per start vertex, record the color
// set of the first rainbow path reaching each vertex; a second rainbow path
// arriving with a different color set splices into a closed walk whose
// set-difference colors appear exactly once. Small explicit graphs fall back
// to an exhaustive scan that is complete for the given length cap.
std::optional<ClosedWalk> find_unique_color_walk(const kikuchi::KGraph& g, const WalkOptions& o);
std::optional<ClosedWalk> find_unique_color_walk(const kikuchi::EdgeColoredGraph& g,
                                                 const WalkOptions& o);

// Complete search: a qualifying closed walk of length <= max_len exists iff
// some edge {u,v} carrying color c admits a u-v path avoiding c of length
// <= max_len-1; scans every (edge, color) pair via bounded BFS. `shortest`
// returns the minimum-length witness instead of the first.
std::optional<ClosedWalk> exhaustive_unique_color_walk(const kikuchi::EdgeColoredGraph& g,
                                                       int max_len, bool shortest);

// Hyperedges of odd multiplicity among the walk's associated edges.
EvenCover cover_from_walk(const ClosedWalk& w);

// Same, checked against the host hypergraph; throws on a malformed walk.
EvenCover extract_even_cover(const kikuchi::KGraph& g, const ClosedWalk& w);

// Rechecks consecutive adjacency via neighbor enumeration plus the
// multiplicity table and the certified color.
bool verify_walk(const kikuchi::KGraph& g, const ClosedWalk& w);

}  // namespace evencover::walks
