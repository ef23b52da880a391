// Copyright 2026 The qudit-sculpt Authors
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


// Python bindings for the sculpting simulator. Structured reports cross the
// boundary as canonical JSON text; state amplitudes cross as numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sculpt/bigraph.h"
#include "sculpt/circuit.h"
#include "sculpt/io.h"
#include "sculpt/protocol.h"
#include "sculpt/targets.h"
#include "sculpt/verify.h"

namespace py = pybind11;
using namespace sculpt;

namespace {

QuditState qudits_from(size_t n, size_t d, const Eigen::VectorXcd &amps, const std::string &basis) {
    return QuditState(n, d, amps, parse_basis_name(basis));
}

py::dict qudit_dict(const QuditState &q) {
    py::dict out;
    out["N"] = q.qudit_count();
    out["d"] = q.dim();
    out["basis"] = basis_name(q.label_basis());
    out["amplitudes"] = q.amplitudes();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sculpting-bigraph simulator for heralded qudit entanglement";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ResidualError>(m, "ResidualError", PyExc_ValueError);

    py::class_<SculptingBigraph>(m, "Bigraph")
        .def_static(
            "from_json", [](const std::string &text) { return bigraph_from_json(nlohmann::json::parse(text)); },
            py::arg("text"))
        .def("to_json", [](const SculptingBigraph &g) { return canonical_dump(bigraph_to_json(g)); })
        .def("to_dot", &bigraph_to_dot)
        .def_property_readonly("N", &SculptingBigraph::spatial_count)
        .def_property_readonly("d", &SculptingBigraph::internal_dim)
        .def_property_readonly("dot_count", [](const SculptingBigraph &g) { return g.dots().size(); })
        .def_property_readonly("edge_count", &SculptingBigraph::edge_count)
        .def("__eq__", [](const SculptingBigraph &a, const SculptingBigraph &b) { return a == b; })
        .def("__repr__", [](const SculptingBigraph &g) {
            return "Bigraph(N=" + std::to_string(g.spatial_count()) + ", d=" + std::to_string(g.internal_dim()) +
                   ", dots=" + std::to_string(g.dots().size()) + ")";
        });

    m.def("singlet_bigraph", &singlet_bigraph, py::arg("n"));
    m.def("dicke_bigraph", &dicke_bigraph, py::arg("n"));
    m.def("symmetric_variant_bigraph", &symmetric_variant_bigraph, py::arg("n"));

    py::class_<SparseState>(m, "SparseState")
        .def_property_readonly("N", [](const SparseState &s) { return s.layout().spatial_count(); })
        .def_property_readonly("d", [](const SparseState &s) { return s.layout().internal_dim(); })
        .def_property_readonly("ancillas", [](const SparseState &s) { return s.layout().ancilla_count(); })
        .def("norm", &SparseState::norm)
        .def("norm_squared", &SparseState::norm_squared)
        .def("is_zero", &SparseState::is_zero)
        .def("photon_count", &SparseState::photon_count)
        .def("__len__", &SparseState::size)
        .def("terms", [](const SparseState &s) {
            std::vector<std::pair<std::vector<uint8_t>, Complex>> out;
            for (const auto &[basis, amp] : s.terms()) {
                out.emplace_back(basis.occupations(), amp);
            }
            return out;
        })
        .def("to_json", [](const SparseState &s) { return canonical_dump(sparse_state_to_json(s)); })
        .def("__repr__", &SparseState::str);

    m.def("initial_state", &initial_state, py::arg("n"), py::arg("d"));
    m.def("apply_sculpting", &apply_sculpting, py::arg("graph"), py::arg("state"), py::arg("tol") = kPruneTolerance);
    m.def("state_from_matchings", &state_from_matchings, py::arg("graph"), py::arg("tol") = kPruneTolerance);
    m.def(
        "enumerate_matchings",
        [](const SculptingBigraph &g) {
            std::vector<std::vector<size_t>> out;
            for (const Matching &match : enumerate_matchings(g)) {
                out.push_back(match.edge_choice);
            }
            return out;
        },
        py::arg("graph"));
    m.def("swap_spatial", &swap_spatial, py::arg("state"), py::arg("j"), py::arg("k"));
    m.def("inner", &inner, py::arg("a"), py::arg("b"));
    m.def("normalize", [](const SparseState &s) { return normalize(s).first; }, py::arg("state"));
    m.def("max_abs_difference", &max_abs_difference, py::arg("a"), py::arg("b"));

    m.def(
        "extract_qudits",
        [](const SparseState &s, const std::string &basis, double tol) {
            Extraction e = extract_qudits(s, parse_basis_name(basis), tol);
            py::dict out = qudit_dict(e.state);
            out["residual_norm"] = e.residual_norm;
            out["relative_residual"] = e.relative_residual;
            return out;
        },
        py::arg("state"), py::arg("basis") = "fourier", py::arg("tol") = kCompareTolerance);

    m.def("singlet_state", [](size_t n) { return singlet_state(n).amplitudes(); }, py::arg("n"));
    m.def("dicke_state", [](size_t n) { return dicke_1n_state(n).amplitudes(); }, py::arg("n"));
    m.def("d33_reference", [] { return d33_reference().amplitudes(); });
    m.def(
        "equal_up_to_phase",
        [](const Eigen::VectorXcd &a, const Eigen::VectorXcd &b, size_t n, size_t d, double tol) {
            PhaseComparison c = equal_up_to_phase(qudits_from(n, d, a, "comp"), qudits_from(n, d, b, "comp"), tol);
            return py::make_tuple(c.equal, c.phase, c.fidelity);
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"), py::arg("tol") = kCompareTolerance);

    py::class_<Circuit>(m, "Circuit")
        .def_static(
            "from_json", [](const std::string &text) { return circuit_from_json(nlohmann::json::parse(text)); },
            py::arg("text"))
        .def("to_json", [](const Circuit &c) { return canonical_dump(circuit_to_json(c)); })
        .def_property_readonly("rail_count", [](const Circuit &c) { return c.layout.rail_count(); })
        .def_property_readonly("gate_count", [](const Circuit &c) { return c.gates.size(); })
        .def_property_readonly("detector_count", [](const Circuit &c) { return c.detectors.size(); })
        .def("transfer_matrix", &transfer_matrix);

    m.def("compile_bigraph", &compile_bigraph, py::arg("graph"), py::arg("reflectivity"));
    m.def(
        "simulate",
        [](const Circuit &c, bool all_outcomes) {
            SimulationOptions options;
            options.all_outcomes = all_outcomes;
            if (c.source) {
                options.target = ideal_heralded_run(*c.source).state;
            }
            nlohmann::json list = nlohmann::json::array();
            for (const HeraldReport &r : simulate(c, circuit_input(c), options)) {
                list.push_back(herald_report_to_json(r));
            }
            return canonical_dump(list);
        },
        py::arg("circuit"), py::arg("all_outcomes") = false);
    m.def(
        "direct_projection_probability",
        [](const Circuit &c) { return direct_projection(c, circuit_input(c)).probability; }, py::arg("circuit"));
    m.def(
        "ideal_heralded_run",
        [](const SculptingBigraph &g) {
            IdealRun run = ideal_heralded_run(g);
            py::dict out = qudit_dict(run.state);
            out["weight"] = run.weight;
            out["oracle_weight"] = run.oracle_weight ? py::cast(*run.oracle_weight) : py::none();
            return out;
        },
        py::arg("graph"));
    m.def(
        "fidelity_sweep",
        [](const SculptingBigraph &g, const std::vector<double> &rs, size_t threads) {
            std::vector<SweepRow> raw;
            {
                py::gil_scoped_release release;
                raw = fidelity_sweep(g, rs, threads);
            }
            std::vector<py::dict> rows;
            for (const SweepRow &row : raw) {
                py::dict d;
                d["reflectivity"] = row.reflectivity;
                d["fidelity"] = row.fidelity;
                d["probability"] = row.probability;
                d["scaled_probability"] = row.scaled_probability;
                rows.push_back(d);
            }
            return rows;
        },
        py::arg("graph"), py::arg("reflectivities"), py::arg("threads") = 1);
    m.def("closed_form_success_probability", &closed_form_success_probability, py::arg("n"));
    m.def("closed_form_success_expression", &closed_form_success_expression, py::arg("n"));

    m.def(
        "verify",
        [](const SculptingBigraph &g, const std::string &target, const std::string &basis, double tol, uint64_t seed) {
            return canonical_dump(verification_report_to_json(
                verify_bigraph(g, "python", parse_target_kind(target), parse_basis_mode(basis), tol, seed)));
        },
        py::arg("graph"), py::arg("target"), py::arg("basis") = "both", py::arg("tol") = kCompareTolerance,
        py::arg("seed") = 1);
}
