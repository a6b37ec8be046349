#include "evencover/serialize.hpp"

namespace evencover {

using nlohmann::json;

json cover_to_json(const EvenCover& c, int walk_length) {
    json j;
    j["edges"] = c.edges;
    j["size"] = c.size();
    if (walk_length >= 0) j["walkLength"] = walk_length;
    return j;
}

EvenCover cover_from_json(const json& j) {
    EvenCover c;
    const json& arr = j.is_array() ? j : j.at("edges");
    for (const auto& x : arr) c.edges.push_back(x.get<EdgeIndex>());
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

json decomposition_to_json(const BucketDecomposition& d) {
    json buckets = json::array();
    for (const auto& b : d.buckets)
        buckets.push_back({{"core", b.core}, {"members", b.members}});
    return {{"m", d.m}, {"t", d.t}, {"buckets", buckets}};
}

BucketDecomposition decomposition_from_json(const json& j) {
    BucketDecomposition d;
    d.m = j.at("m").get<int>();
    d.t = j.at("t").get<int>();
    for (const auto& bj : j.at("buckets")) {
        Bucket b;
        for (const auto& x : bj.at("core")) b.core.push_back(x.get<Vertex>());
        for (const auto& x : bj.at("members")) b.members.push_back(x.get<EdgeIndex>());
        d.buckets.push_back(std::move(b));
    }
    return d;
}

json outcome_to_json(const cleaning::CleaningOutcome& o) {
    json j;
    switch (o.kind) {
        case cleaning::OutcomeKind::PrunedLowCodegree: j["kind"] = "PrunedLowCodegree"; break;
        case cleaning::OutcomeKind::Bucketed: j["kind"] = "Bucketed"; break;
        case cleaning::OutcomeKind::MinDegreeCore: j["kind"] = "MinDegreeCore"; break;
    }
    j["t"] = o.t;
    j["edges"] = o.sub.edge_count();
    j["origin"] = o.origin;
    j["degenerate"] = o.degenerate;
    if (o.decomposition) j["decomposition"] = decomposition_to_json(*o.decomposition);
    return j;
}

json stats_to_json(const kikuchi::KGraphStats& s) {
    json j;
    j["log2Vertices"] = s.n_log2;
    if (s.n_exact != UINT64_MAX) j["vertices"] = s.n_exact;
    j["edges"] = s.edge_count;
    j["avgDegree"] = s.avg_degree;
    j["boundAvgDegree"] = s.bound_avg_degree;
    j["exact"] = s.exact;
    if (!s.exact) j["stdError"] = s.std_error;
    return j;
}

json walk_to_json(const walks::ClosedWalk& w) {
    json edges = json::array();
    for (const auto& e : w.edges) {
        json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["assoc"] = e.info.assoc;
        json colors = json::array();
        for (int i = 0; i < e.info.ncolors; ++i) colors.push_back(e.info.colors[i]);
        je["colors"] = colors;
        edges.push_back(std::move(je));
    }
    json j;
    j["edges"] = edges;
    j["uniqueColor"] = w.unique_color;
    return j;
}

walks::ClosedWalk walk_from_json(const json& j) {
    walks::ClosedWalk w;
    for (const auto& je : j.at("edges")) {
        walks::WalkEdge e;
        for (const auto& x : je.at("u")) e.u.push_back(x.get<uint32_t>());
        for (const auto& x : je.at("v")) e.v.push_back(x.get<uint32_t>());
        for (const auto& x : je.at("assoc")) e.info.assoc.push_back(x.get<EdgeIndex>());
        const auto& colors = je.at("colors");
        e.info.ncolors = (int)colors.size();
        for (size_t i = 0; i < colors.size() && i < 2; ++i)
            e.info.colors[i] = colors[i].get<uint32_t>();
        w.edges.push_back(std::move(e));
    }
    w.unique_color = j.at("uniqueColor").get<int32_t>();
    w.color_multiplicity = walks::walk_color_multiplicities(w);
    return w;
}

}  // namespace evencover
