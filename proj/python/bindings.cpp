#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matchgap/characterize.hpp"
#include "matchgap/edgelist.hpp"
#include "matchgap/errors.hpp"
#include "matchgap/gadget.hpp"
#include "matchgap/gap_oracle.hpp"
#include "matchgap/generators.hpp"
#include "matchgap/graph.hpp"
#include "matchgap/matching.hpp"
#include "matchgap/version.hpp"

namespace py = pybind11;
using namespace matchgap;

namespace {

EnumOptions enum_options(int limit, bool force) {
    EnumOptions o;
    o.limit = limit;
    o.force = force;
    return o;
}

CensusOptions census_options(int limit, bool force) {
    CensusOptions o;
    o.limit = limit;
    o.force = force;
    return o;
}

py::dict to_dict(const GapProfile& p) {
    py::dict d;
    d["nu"] = p.nu;
    d["L"] = p.L;
    d["l"] = p.l;
    d["F_L"] = p.F_L;
    d["F_l"] = p.F_l;
    d["matchings_examined"] = p.matchings_examined;
    return d;
}

py::dict to_dict(const CharacterizationCertificate& c) {
    py::dict d;
    d["verdict"] = c.verdict;
    d["v1"] = c.v1;
    d["x_side"] = c.x_side;
    d["y_side"] = c.y_side;
    if (c.verdict) {
        d["packing"] = c.packing;
    } else {
        d["failed_condition"] = c.failed_condition;
        d["refutation"] = c.refutation;
        if (!c.odd_cycle.empty()) d["odd_cycle"] = c.odd_cycle;
    }
    return d;
}

py::dict to_dict(const TwoFactorStats& s) {
    py::dict d;
    d["count"] = s.count;
    d["w"] = s.w;
    d["W"] = s.W;
    d["witness_min"] = s.witness_min;
    d["witness_max"] = s.witness_max;
    return d;
}

}  // namespace

PYBIND11_MODULE(_matchgap, m) {
    m.doc() = "Matching-removal gap analysis on small graphs";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
            return out.str();
        });

    m.def("parse_edgelist", &parse_edgelist, py::arg("text"));
    m.def("write_edgelist", &write_edgelist, py::arg("graph"));

    m.def("is_bridgeless", &is_bridgeless, py::arg("graph"));
    m.def("triangles", &triangles, py::arg("graph"));
    m.def("connected_components", &connected_components, py::arg("graph"));

    m.def("nu", &nu, py::arg("graph"));
    m.def(
        "maximum_matching", [](const Graph& g) { return maximum_matching(g).edges; },
        py::arg("graph"));

    m.def(
        "gap_profile",
        [](const Graph& g, int limit, bool force) {
            return to_dict(gap_profile(g, enum_options(limit, force)));
        },
        py::arg("graph"), py::arg("limit") = 20, py::arg("force") = false);

    m.def(
        "check_pairwise_bound",
        [](const Graph& g, int limit, bool force) {
            PairwiseBoundReport r = check_pairwise_bound(g, enum_options(limit, force));
            py::dict d;
            d["L"] = r.L;
            d["l"] = r.l;
            d["tight_F"] = r.tight_F;
            d["tight_F_prime"] = r.tight_F_prime;
            d["matchings_examined"] = r.matchings_examined;
            return d;
        },
        py::arg("graph"), py::arg("limit") = 20, py::arg("force") = false);

    m.def(
        "check_perfect_matching_bound",
        [](const Graph& g, int limit, bool force) {
            PerfectMatchingBoundReport r = check_perfect_matching_bound(g, enum_options(limit, force));
            py::dict d;
            d["applicable"] = r.applicable;
            if (r.applicable) {
                d["nu"] = r.nu;
                d["L"] = r.L;
                d["l"] = r.l;
            }
            return d;
        },
        py::arg("graph"), py::arg("limit") = 20, py::arg("force") = false);

    m.def(
        "pendant_reduction",
        [](const Graph& g) {
            PendantReductionTrace t = pendant_reduction(g);
            py::dict d;
            d["steps"] = t.steps;
            d["removed"] = t.removed;
            d["k"] = t.k();
            d["residual"] = t.residual.graph;
            d["new_to_old"] = t.residual.new_to_old;
            return d;
        },
        py::arg("graph"));

    m.def(
        "extremal_structure_check",
        [](const Graph& g, int limit, bool force) {
            ExtremalStructureReport r = extremal_structure_check(g, enum_options(limit, force));
            py::dict d;
            d["L"] = r.L;
            d["l"] = r.l;
            d["extremal_L_count"] = r.extremal_L_count;
            d["extremal_l_count"] = r.extremal_l_count;
            d["pairs_checked"] = r.pairs_checked;
            d["h_matchings_checked"] = r.h_matchings_checked;
            return d;
        },
        py::arg("graph"), py::arg("limit") = 20, py::arg("force") = false);

    m.def(
        "v1_set",
        [](const Graph& g) {
            V1Selection s = v1_set(g);
            py::dict d;
            d["degree_one"] = s.degree_one;
            d["qualifying_triangles"] = s.qualifying_triangles;
            d["chosen"] = s.chosen;
            d["v1"] = s.v1;
            return d;
        },
        py::arg("graph"));

    m.def(
        "check_L_eq_2l", [](const Graph& g) { return to_dict(check_L_eq_2l(g)); },
        py::arg("graph"));

    m.def(
        "inflate",
        [](const Graph& g) {
            Inflation inf = inflate(g);
            py::dict d;
            d["inflated"] = inf.inflated;
            d["vertex_map"] = inf.vertex_map;
            d["edge_map"] = inf.edge_map;
            return d;
        },
        py::arg("graph"));

    m.def(
        "odd_cycle_stats",
        [](const Graph& g, int limit, bool force) {
            return to_dict(odd_cycle_stats(g, census_options(limit, force)));
        },
        py::arg("graph"), py::arg("limit") = 36, py::arg("force") = false);

    m.def(
        "three_edge_colorable",
        [](const Graph& g) -> py::object {
            std::optional<EdgeColoring3> c = three_edge_colorable(g);
            if (!c) return py::none();
            return py::cast(c->color);
        },
        py::arg("graph"));

    m.def(
        "inflation_L_l",
        [](const Graph& base, int limit, bool force) {
            InflationGap gap = inflation_L_l(inflate(base), census_options(limit, force));
            py::dict d;
            d["L"] = gap.L;
            d["l"] = gap.l;
            d["stats"] = to_dict(gap.stats);
            return d;
        },
        py::arg("base"), py::arg("limit") = 36, py::arg("force") = false);

    m.def(
        "reduction_check",
        [](const Graph& g, int limit, bool force) {
            ReductionReport r = reduction_check(g, census_options(limit, force));
            py::dict d;
            d["base_colorable"] = r.base_colorable;
            d["inflated_colorable"] = r.inflated_colorable;
            d["ratio_holds"] = r.ratio_holds;
            d["consistent"] = r.consistent;
            d["L"] = r.L;
            d["l"] = r.l;
            d["w"] = r.w;
            d["W"] = r.W;
            d["two_factor_count"] = r.two_factor_count;
            return d;
        },
        py::arg("graph"), py::arg("limit") = 36, py::arg("force") = false);

    m.def("random_gnp", &random_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def(
        "random_cubic_bridgeless",
        [](int n, std::uint64_t seed, int max_attempts) {
            CubicOptions o;
            o.max_attempts = max_attempts;
            return random_cubic_bridgeless(n, seed, o);
        },
        py::arg("n"), py::arg("seed"), py::arg("max_attempts") = 20000);
}
