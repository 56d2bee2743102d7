// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Vertices are 0-indexed here as in the C++ API; text
// formats stay 1-indexed.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amegraph/codes.h"
#include "amegraph/composite.h"
#include "amegraph/entanglement.h"
#include "amegraph/error.h"
#include "amegraph/graph.h"
#include "amegraph/qss.h"
#include "amegraph/repro.h"
#include "amegraph/search.h"
#include "amegraph/simulator.h"

namespace py = pybind11;
using namespace amegraph;

namespace {

using EdgeTuple = std::tuple<Vertex, Vertex, Residue>;

Graph graph_from_tuples(std::uint32_t p, std::size_t n, const std::vector<EdgeTuple> &edges) {
    std::vector<Edge> e;
    for (const auto &[i, j, w] : edges) {
        e.push_back({i, j, w});
    }
    return Graph::from_edges(Prime(p), n, e);
}

std::vector<EdgeTuple> edge_tuples(const Graph &g) {
    std::vector<EdgeTuple> out;
    for (const Edge &e : g.edges()) {
        out.emplace_back(e.i, e.j, e.w);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the amegraph package.";

    static py::exception<Error> error_type(m, "AmegraphError");
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) {
                std::rethrow_exception(ptr);
            }
        } catch (const Error &e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::uint32_t p, std::size_t n, const std::vector<EdgeTuple> &edges) {
                 return graph_from_tuples(p, n, edges);
             }),
             py::arg("p"), py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{})
        .def_static("parse", [](const std::string &text) { return parse_graph(text); })
        .def_static("builtin", [](const std::string &name) { return builtin_witness(name); })
        .def_property_readonly("p", [](const Graph &g) { return g.prime().value(); })
        .def_property_readonly("n", &Graph::size)
        .def("weight", &Graph::weight)
        .def("edges", &edge_tuples)
        .def("key", &Graph::key)
        .def("with_prime", [](const Graph &g, std::uint32_t q) { return g.with_prime(Prime(q)); })
        .def("to_text", [](const Graph &g) { return to_text(g); })
        .def("to_dot", [](const Graph &g) { return to_dot(g); })
        .def("to_circuit", [](const Graph &g) { return to_circuit(g); })
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__repr__", [](const Graph &g) {
            return "<Graph p=" + std::to_string(g.prime().value()) + " n=" + std::to_string(g.size()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("builtin_witness_names", &builtin_witness_names);
    m.def("op_mult", &op_mult, py::arg("g"), py::arg("v"), py::arg("b"));
    m.def("op_star", &op_star, py::arg("g"), py::arg("v"), py::arg("a"));
    m.def("canonical_form", &canonical_form);
    m.def("truncate", [](const Graph &g, const VertexSet &k) { return amegraph::truncate(g, k); });

    py::class_<AmeReport>(m, "AmeReport")
        .def_readonly("is_ame", &AmeReport::is_ame)
        .def_readonly("witness", &AmeReport::witness)
        .def_property_readonly("cuts",
                               [](const AmeReport &r) {
                                   std::vector<std::pair<VertexSet, std::size_t>> out;
                                   for (const CutRank &c : r.cuts) {
                                       out.emplace_back(c.k, c.rank);
                                   }
                                   return out;
                               })
        .def("__str__", [](const AmeReport &r) { return format_report(r); });

    m.def("cut_edits", &cut_edits, py::arg("g"), py::arg("k"));
    m.def("is_ame", &is_ame);
    m.def(
        "ame_report",
        [](const Graph &g, bool all_cuts) { return ame_report(g, all_cuts ? CutScope::kAll : CutScope::kHalf); },
        py::arg("g"), py::arg("all_cuts") = false);
    m.def(
        "is_ame_grouped",
        [](const Graph &g, std::size_t group_size) {
            return is_ame_grouped(g, contiguous_groups(g.size() / group_size, group_size));
        },
        py::arg("g"), py::arg("group_size"));
    m.def(
        "dense_cut_entropy", [](const Graph &g, const VertexSet &k) { return cut_entropy(build_graph_state(g), k); },
        py::arg("g"), py::arg("k"), "Von Neumann entropy of the dense graph state across K, in edits.");

    m.def(
        "code_to_graph", [](const std::string &code) { return code_to_ame_graph(load_code(code)); }, py::arg("code"),
        "AME graph from 'hamming433', 'grs:p,n,k' or a code file.");

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("witnesses", &SearchResult::witnesses)
        .def_readonly("examined", &SearchResult::examined)
        .def_readonly("pruned", &SearchResult::pruned)
        .def_readonly("exhaustive", &SearchResult::exhaustive)
        .def_readonly("seconds", &SearchResult::seconds)
        .def("stats", [](const SearchResult &r) { return format_stats(r); });

    m.def(
        "search",
        [](std::size_t n, std::uint32_t p, const std::string &mode, std::optional<std::uint64_t> seed,
           std::size_t group_size, std::size_t workers, bool prune, std::uint64_t samples, std::size_t max_witnesses) {
            SearchSpec s;
            s.n = n;
            s.p = p;
            s.group_size = group_size;
            s.workers = workers;
            s.samples = samples;
            s.max_witnesses = max_witnesses;
            if (mode == "random") {
                if (!seed) {
                    throw Error(ErrorCode::kInvalidArgument, "random search requires a seed");
                }
                s.mode = SearchMode::kRandom;
                s.seed = *seed;
                s.pruning.min_degree = prune;
            } else if (mode == "exhaustive") {
                s.pruning = {prune && group_size == 1, prune, prune};
            } else {
                throw Error(ErrorCode::kInvalidArgument, "mode must be 'exhaustive' or 'random'");
            }
            py::gil_scoped_release release;
            return run_search(s);
        },
        py::arg("n"), py::arg("p"), py::arg("mode") = "exhaustive", py::arg("seed") = py::none(),
        py::arg("group_size") = 1, py::arg("workers") = 1, py::arg("prune") = false, py::arg("samples") = 1000000,
        py::arg("max_witnesses") = 0);

    m.def(
        "run_threshold",
        [](const Graph &g, const std::vector<Complex> &secret, const VertexSet &b, Vertex dealer, Residue g_out,
           Residue h_out) { return run_threshold(ThresholdScheme(g, dealer), secret, b, {g_out, h_out}); },
        py::arg("graph"), py::arg("secret"), py::arg("players"), py::arg("dealer") = 0, py::arg("g") = 0,
        py::arg("h") = 0, "Fidelity of the secret recovered by the given players.");
    m.def(
        "run_ramp",
        [](const Graph &g, const std::vector<Complex> &secret, const VertexSet &b, const VertexSet &dealers) {
            return run_ramp(RampScheme(g, dealers), secret, b);
        },
        py::arg("graph"), py::arg("secret"), py::arg("players"), py::arg("dealers"));

    m.def(
        "composite_report",
        [](std::size_t n, std::uint64_t d) {
            CompositeAme c = build_composite(n, d, WitnessRegistry::builtin());
            CompositeReport r = verify_composite(c);
            return py::make_tuple(r.is_ame, format_composite_report(c, r));
        },
        py::arg("n"), py::arg("d"));
    m.def("factorize", &factorize);

    m.def(
        "run_criterion",
        [](int id, bool quick, std::uint64_t seed) {
            CriterionResult r = run_criterion(id, ReproOptions{quick, seed});
            return py::make_tuple(r.pass, format_result(r, false));
        },
        py::arg("id"), py::arg("quick") = false, py::arg("seed") = 1);
}
