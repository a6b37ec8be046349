#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "evencover/cleaning.hpp"
#include "evencover/gf2.hpp"
#include "evencover/kikuchi.hpp"
#include "evencover/ldc.hpp"
#include "evencover/pipeline.hpp"
#include "evencover/serialize.hpp"
#include "evencover/walks.hpp"

namespace py = pybind11;
using namespace evencover;

namespace {

Hypergraph make_hypergraph(int n, int k, const std::vector<VertexSet>& edges, bool multi) {
    return Hypergraph::create(n, k, edges, multi);
}

py::dict stats_dict(const kikuchi::KGraphStats& s) {
    py::dict d;
    d["log2_vertices"] = s.n_log2;
    d["edges"] = s.edge_count;
    d["avg_degree"] = s.avg_degree;
    d["bound_avg_degree"] = s.bound_avg_degree;
    d["exact"] = s.exact;
    return d;
}

py::dict report_dict(const pipeline::PipelineReport& rep) {
    py::dict d;
    d["route"] = rep.route;
    d["success"] = rep.success;
    if (rep.cover) d["cover"] = rep.cover->edges;
    d["walk_length"] = rep.walk_length;
    if (rep.baseline) d["baseline"] = rep.baseline->edges;
    d["stats"] = py::module_::import("json").attr("loads")(rep.stats.dump());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "short even covers in k-uniform hypergraphs";

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init(&make_hypergraph), py::arg("n"), py::arg("k"), py::arg("edges"),
             py::arg("multi") = false)
        .def_readonly("n", &Hypergraph::n)
        .def_readonly("k", &Hypergraph::k)
        .def_readonly("multi", &Hypergraph::multi)
        .def_readonly("edges", &Hypergraph::edges)
        .def("edge_count", &Hypergraph::edge_count)
        .def("degrees", &Hypergraph::degrees)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n) + ", k=" + std::to_string(h.k) +
                   ", m=" + std::to_string(h.edge_count()) + ")";
        });

    py::class_<ColoredHypergraph>(m, "ColoredHypergraph")
        .def(py::init([](const Hypergraph& base, const std::vector<uint32_t>& colors) {
                 return ColoredHypergraph{base, colors, {}};
             }),
             py::arg("base"), py::arg("colors") = std::vector<uint32_t>{})
        .def_readonly("base", &ColoredHypergraph::base)
        .def_readonly("colors", &ColoredHypergraph::colors)
        .def("is_colored", &ColoredHypergraph::is_colored);

    m.def("symmetric_difference", &symmetric_difference);
    m.def(
        "verify_even_cover",
        [](const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
            return verify_even_cover(h, EvenCover{edges});
        },
        py::arg("h"), py::arg("cover"));
    m.def("codegree", &codegree);
    m.def("properly_colored", &properly_colored);
    m.def("load_hypergraph", &load_hypergraph);
    m.def("store_hypergraph", &store_hypergraph);

    m.def("find_dependency", [](const Hypergraph& h) -> py::object {
        auto c = gf2::find_dependency(h);
        if (!c) return py::none();
        return py::cast(c->edges);
    });
    m.def(
        "min_weight_cover_bruteforce",
        [](const Hypergraph& h, int max_size) -> py::object {
            auto c = gf2::min_weight_cover_bruteforce(h, max_size);
            if (!c) return py::none();
            return py::cast(c->edges);
        },
        py::arg("h"), py::arg("max_size"));

    m.def("min_degree_core", [](const Hypergraph& h) {
        auto core = cleaning::min_degree_core(h);
        return py::make_tuple(core.sub, core.origin, core.removed);
    });

    m.def(
        "even_kikuchi_stats",
        [](const Hypergraph& h, int l, bool explicit_backend) {
            auto g = kikuchi::build_even_kikuchi(
                h, l,
                explicit_backend ? kikuchi::Backend::Explicit : kikuchi::Backend::Implicit);
            return stats_dict(kikuchi::kikuchi_stats(g));
        },
        py::arg("h"), py::arg("l"), py::arg("explicit_backend") = true);

    m.def(
        "find_even_cover",
        [](const Hypergraph& h, int l, uint64_t seed, int effort, const std::string& route,
           int max_walk_len, int pair_budget, int flower_delta, bool allow_fallback) {
            pipeline::PipelineOptions o;
            o.l = l;
            o.seed = seed;
            o.effort = effort;
            o.route = route;
            o.max_walk_len = max_walk_len;
            o.pair_budget = pair_budget;
            o.flower_delta = flower_delta;
            o.allow_fallback = allow_fallback;
            return report_dict(pipeline::find_even_cover(h, o));
        },
        py::arg("h"), py::arg("l") = 2, py::arg("seed") = 1, py::arg("effort") = 16,
        py::arg("route") = "auto", py::arg("max_walk_len") = -1, py::arg("pair_budget") = -1,
        py::arg("flower_delta") = -1, py::arg("allow_fallback") = true);

    m.def("gen_random", &pipeline::gen_random, py::arg("n"), py::arg("k"), py::arg("m"),
          py::arg("seed"), py::arg("model") = "simple");

    py::class_<ldc::LinearCode>(m, "LinearCode")
        .def_readonly("m", &ldc::LinearCode::m)
        .def_readonly("n", &ldc::LinearCode::n)
        .def_property_readonly("distance", [](const ldc::LinearCode& c) -> py::object {
            if (!c.distance) return py::none();
            return py::cast(*c.distance);
        });

    m.def("hadamard_code", &ldc::hadamard_code);
    m.def("load_generator", &ldc::load_generator);
    m.def("store_generator", &ldc::store_generator);

    m.def("normal_form", [](const ldc::LinearCode& c) {
        auto nf = ldc::normal_form(c);
        py::dict d;
        d["matchings"] = nf.matchings;
        d["min_matching"] = nf.min_matching;
        d["delta"] = nf.delta;
        d["matching_floor"] = nf.matching_floor;
        d["triple_counts"] = nf.triple_counts;
        d["union"] = nf.union_h;
        return d;
    });

    m.def(
        "find_odd_color_cover",
        [](const ColoredHypergraph& h, double alpha, double K, int l, uint64_t seed,
           int effort) {
            ldc::OddCoverOptions o;
            o.alpha = alpha;
            o.k_const = K;
            o.l = l;
            o.seed = seed;
            o.effort = effort;
            auto res = ldc::find_odd_color_cover(h, o);
            py::dict d;
            d["success"] = res.cover.has_value();
            if (res.cover) {
                d["cover"] = res.cover->edges;
                d["certificate_color"] = res.certificate_color;
                d["walk_length"] = res.walk_length;
            }
            d["case"] = res.case_taken;
            d["density_ok"] = res.density_ok;
            return d;
        },
        py::arg("h"), py::arg("alpha") = 1.0 / 3, py::arg("K") = -1, py::arg("l") = -1,
        py::arg("seed") = 1, py::arg("effort") = 16);
}
