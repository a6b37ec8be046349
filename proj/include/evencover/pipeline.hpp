#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "evencover/hypergraph.hpp"

namespace evencover::pipeline {

struct PipelineOptions {
    int l = 2;
    uint64_t seed = 1;
    int effort = 16;
    std::string route = "auto";  // auto | evenk | oddk | flower
    bool allow_fallback = true;  // linear-algebra baseline / last resort
    int max_walk_len = -1;
    int pair_budget = -1;         // heavy-pair extraction budget, default ceil(e/2)
    int flower_delta = -1;        // |E_v| override; default ceil(d/(10k))
    double prune_threshold = -1;  // forwarded to the heavy-color prune
    bool collect_timing = false;  // wall time is off by default to keep output reproducible
};

struct PipelineReport {
    std::string route = "None";  // EvenK | PairReduced | OddK-t>1 | OddK-t1 | OddK-flower |
                                 // LinearAlgebraFallback | None
    bool success = false;
    std::optional<EvenCover> cover;  // indices into the original input
    int walk_length = 0;
    std::optional<EvenCover> baseline;  // linear-algebra dependency when e >= n+1
    nlohmann::json stats;
    double wall_ms = 0;  // only when collect_timing
};

// Dispatch by parity of k: even k goes straight to the subset graph; odd k is
// cleaned (heavy-pair reduction, then multilevel extraction) and routed to the
// bipartite graph (t > 1) or the flower graph (t = 1). Covers are lifted
// through every reduction and verified against the input.
PipelineReport find_even_cover(const Hypergraph& h, const PipelineOptions& o);

// Seed-deterministic random instances; model "simple" (distinct edges) or
// "multi" (i.i.d. with repetition).
Hypergraph gen_random(int n, int k, int m, uint64_t seed, const std::string& model);

struct SweepConfig {
    std::vector<int> n, k, m, l;
    std::vector<uint64_t> seeds;
    std::string model = "simple";
    std::string route = "auto";
    int effort = 16;
    int max_walk_len = -1;
    bool timing = false;
};

SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// One CSV row per grid cell and seed:
// n,k,m,l,seed,route,success,coverSize,walkLen,oracleMin,ms
void sweep(const SweepConfig& cfg, std::ostream& csv);

}  // namespace evencover::pipeline
