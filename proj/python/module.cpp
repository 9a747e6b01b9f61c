#include "pathhom/digraph.hpp"
#include "pathhom/enumerate.hpp"
#include "pathhom/flow_graph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/json_io.hpp"
#include "pathhom/metrics.hpp"
#include "pathhom/skeleton.hpp"
#include "pathhom/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pathhom;

namespace {

py::list generators_as_list(const Digraph& d, const GeneratorSet& gens) {
    py::list cycles;
    for (const auto& cycle : gens.cycles) {
        py::list terms;
        for (const auto& [j, coef] : cycle) {
            const Path& arc = gens.arcs[static_cast<size_t>(j)];
            terms.append(py::make_tuple(
                py::make_tuple(d.label(arc[0]), d.label(arc[1])), coeff_string(coef)));
        }
        cycles.append(terms);
    }
    return cycles;
}

Digraph parse_any(const std::string& text, const std::string& format, bool transform_loops) {
    ParseResult parsed = format == "dot" ? parse_dot_ex(text, transform_loops)
                                         : parse_edge_list_ex(text, transform_loops);
    return transform_loops ? loop_transform(parsed) : parsed.graph;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Path homology and cyclomatic complexity of directed graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SelfLoopError>(m, "SelfLoopError", PyExc_ValueError);
    py::register_exception<PathCapExceeded>(m, "PathCapExceeded", PyExc_RuntimeError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<>())
        .def("add_vertex", &Digraph::add_vertex, py::arg("label"))
        .def("add_arc",
             py::overload_cast<const std::string&, const std::string&>(&Digraph::add_arc),
             py::arg("tail"), py::arg("head"))
        .def("has_arc", py::overload_cast<int, int>(&Digraph::has_arc, py::const_))
        .def_property_readonly("num_vertices", &Digraph::num_vertices)
        .def_property_readonly("num_arcs", &Digraph::num_arcs)
        .def("labels", &Digraph::labels)
        .def("label", &Digraph::label, py::arg("v"))
        .def("arcs", &Digraph::arcs)
        .def("to_edge_list", &Digraph::to_edge_list)
        .def("__repr__", [](const Digraph& d) {
            return "<Digraph with " + std::to_string(d.num_vertices()) + " vertices, " +
                   std::to_string(d.num_arcs()) + " arcs>";
        });

    py::class_<BettiProfile>(m, "BettiProfile")
        .def_readonly("values", &BettiProfile::values)
        .def_readonly("reduced", &BettiProfile::reduced)
        .def_readonly("p_max", &BettiProfile::p_max)
        .def_readonly("complete", &BettiProfile::complete);

    py::class_<MetricReport>(m, "MetricReport")
        .def_readonly("cyclomatic", &MetricReport::cyclomatic_number)
        .def_readonly("betti", &MetricReport::betti)
        .def_readonly("divergence", &MetricReport::divergence)
        .def_readonly("graph_id", &MetricReport::graph_id);

    m.def("parse_graph", &parse_any, py::arg("text"), py::arg("format") = "edge-list",
          py::arg("transform_loops") = false,
          "Parse an edge-list or restricted-DOT digraph");
    m.def("betti", &betti, py::arg("digraph"), py::arg("p_max") = 3,
          py::arg("path_cap") = kDefaultPathCap,
          "Path homology Betti numbers over the rationals");
    m.def("betti_mod_p", &betti_mod_p, py::arg("digraph"), py::arg("p_max"), py::arg("prime"),
          py::arg("path_cap") = kDefaultPathCap);
    m.def("brute_force_oracle", &brute_force_oracle, py::arg("digraph"), py::arg("p_max") = 3);
    m.def("cyclomatic", &cyclomatic, py::arg("digraph"));
    m.def("compare", &compare, py::arg("digraph"), py::arg("p_max") = 3,
          py::arg("graph_id") = "", py::arg("path_cap") = kDefaultPathCap,
          "Cyclomatic number, Betti profile and their divergence");
    m.def(
        "h1_generators",
        [](const Digraph& d) { return generators_as_list(d, h1_generators(d)); },
        py::arg("digraph"),
        "Reduced 1-homology basis as [[((tail, head), 'num/den'), ...], ...]");
    m.def(
        "analyze_json",
        [](const Digraph& d, int p_max, bool generators) {
            MetricReport report = compare(d, p_max);
            if (!generators) return metric_report_json(d, report, nullptr).dump();
            GeneratorSet gens = h1_generators(d);
            return metric_report_json(d, report, &gens).dump();
        },
        py::arg("digraph"), py::arg("p_max") = 3, py::arg("generators") = false,
        "JSON analysis record, same schema as the CLI");

    m.def("two_cycle", &two_cycle);
    m.def("nontrivial_flow_example", &nontrivial_flow_example);
    m.def("suspension", &suspension, py::arg("digraph"), py::arg("k"));
    m.def("k_partite_tower", &k_partite_tower, py::arg("layer_sizes"));

    m.def(
        "structured_skeleton",
        [](std::uint64_t seed, int n_productions) {
            Skeleton sk = gen_structured_skeleton(seed, n_productions);
            return py::make_tuple(skeleton_to_text(sk.lines), sk.cfg, sk.predicate_count);
        },
        py::arg("seed"), py::arg("n_productions"),
        "Returns (text, cfg, predicate_count) for a random structured skeleton");
    m.def(
        "goto_skeleton",
        [](std::uint64_t seed, int n_gotos, int n_lines) {
            Skeleton sk = gen_goto_skeleton(seed, n_gotos, n_lines);
            return py::make_tuple(skeleton_to_text(sk.lines), sk.cfg, sk.predicate_count);
        },
        py::arg("seed"), py::arg("n_gotos"), py::arg("n_lines"));

    m.def("enumerate_outdeg2_family", &enumerate_outdeg2_family, py::arg("n"));
    m.def(
        "enumerate_2fg_progenitors",
        [](int n) {
            py::list out;
            for (const auto& rec : enumerate_2fg_progenitors(n)) {
                out.append(py::make_tuple(rec.digraph, rec.valid_pairs, rec.betti));
            }
            return out;
        },
        py::arg("n"), "Returns [(digraph, valid_pairs, betti), ...]");

    m.def(
        "validate_flow_graph",
        [](const Digraph& d) {
            auto v = validate_flow_graph(d);
            return py::make_tuple(v.ok(), v.violations);
        },
        py::arg("digraph"), "Returns (ok, violations)");
}
