#pragma once

#include <functional>
#include <optional>

#include "evencover/hypergraph.hpp"

namespace evencover::cleaning {

enum class OutcomeKind { PrunedLowCodegree, Bucketed, MinDegreeCore };

struct CleaningOutcome {
    OutcomeKind kind;
    Hypergraph sub;
    std::vector<EdgeIndex> origin;  // sub edge index -> input edge index
    std::optional<BucketDecomposition> decomposition;  // indices into sub; iff Bucketed
    int t = 0;
    bool degenerate = false;              // sub is empty
    std::vector<double> thresholds;       // realized m(r) values, indexed by r (multilevel)
};

struct CoreResult {
    Hypergraph sub;
    std::vector<EdgeIndex> origin;
    std::vector<Vertex> removed;
};

// Iteratively deletes the lowest-indexed vertex of degree < d/2, with the
// threshold d = e(h)/n fixed from the input. The result keeps at least half
// the edges and every vertex still covered has degree >= d/2.
CoreResult min_degree_core(const Hypergraph& h);

// Greedy (max(1, floor(d/2)), 1)-bucket decomposition covering at least half
// the edges: while short, take the lowest-indexed vertex of residual degree
// >= b and its b lowest-indexed residual edges.
CleaningOutcome single_vertex_buckets(const Hypergraph& h);

// Repeatedly extract, from the lexicographically smallest t-set of codegree
// >= m, its m lowest-indexed edges, until e_budget edges are covered or no
// heavy set remains. Bucketed when the covered count reaches e_budget (and is
// nonzero); otherwise PrunedLowCodegree with every t-set codegree < m.
CleaningOutcome prune_or_bucket(const Hypergraph& h, int t, int m, int e_budget);

struct PairReduction {
    Hypergraph g;  // 2(k-j)-uniform multi-hypergraph of Y_i xor Z_i
    std::vector<std::pair<EdgeIndex, EdgeIndex>> lift;  // g edge -> (Y_i, Z_i) in host
    int j = 0;  // majority intersection size
};

// Keeps the buckets whose pair intersects in the most frequent size j and
// forms the hypergraph of pairwise symmetric differences. Buckets with
// identical member edges are rejected.
PairReduction pair_reduction(const BucketDecomposition& d, const Hypergraph& host);

EvenCover lift_cover(const PairReduction& pr, const EvenCover& gcover);

struct LowCodegreeResult {
    CleaningOutcome outcome;
    std::optional<PairReduction> reduction;  // present iff outcome is Bucketed
};

// Either a sub-hypergraph where every ((k+1)/2)-set has codegree <= 1 (losing
// at most `budget` edges), or a (2,(k+1)/2)-bucket decomposition handed to
// pair_reduction so the even-uniformity pipeline applies to g. A negative
// budget selects n (n/l)^((k-3)/2) log2 n, capped at e(h).
LowCodegreeResult low_codegree_reduct(const Hypergraph& h, int l, int budget);

// Multilevel extraction: repeatedly take the maximal r in [2, k/2] admitting a
// set of codegree >= m(r) (lexicographically smallest set) and extract
// ceil(m(r)) lowest-indexed edges into level r's pool; stop when no heavy set
// remains or right after cumulative extraction exceeds e(h)/2. Returns either
// the largest pool with its (ceil(m(t)), t)-decomposition or the min-degree
// core of the residual (t = 1).
CleaningOutcome multilevel_clean(const Hypergraph& h, const std::function<double(int)>& m);

}  // namespace evencover::cleaning
