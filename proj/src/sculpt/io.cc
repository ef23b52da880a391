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

#include "sculpt/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace sculpt {

namespace {

void dump_into(const json &value, std::string &out, int depth) {
    std::string pad((size_t)(2 * (depth + 1)), ' ');
    std::string close_pad((size_t)(2 * depth), ' ');
    switch (value.type()) {
        case json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, item] : value.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad + json(key).dump() + ": ";
                dump_into(item, out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < value.size(); i++) {
                if (i) {
                    out += ",\n";
                }
                out += pad;
                dump_into(value[i], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float: {
            double x = value.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            out += buf;
            return;
        }
        default:
            out += value.dump();
    }
}

template <class T>
T require(const json &obj, const char *key, const char *where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(std::string(where) + ": missing key '" + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw FormatError(std::string(where) + ": bad value for '" + key + "': " + e.what());
    }
}

size_t require_index(const json &obj, const char *key, const char *where) {
    const json &v = obj.contains(key) ? obj.at(key) : json();
    if (!v.is_number_integer() || v.get<int64_t>() < 0) {
        throw FormatError(std::string(where) + ": '" + key + "' must be a non-negative integer");
    }
    return v.get<size_t>();
}

json phase_to_json(const PiPhase &p) {
    return json{{"num", p.num()}, {"den", p.den()}};
}

PiPhase phase_from_json(const json &v, const char *where) {
    int64_t num = require<int64_t>(v, "num", where);
    int64_t den = require<int64_t>(v, "den", where);
    if (den == 0) {
        throw FormatError(std::string(where) + ": phase denominator is zero");
    }
    return PiPhase(num, den);
}

json amp_entry(Complex amp) {
    return json{{"re", amp.real()}, {"im", amp.imag()}};
}

Complex amp_from(const json &v, const char *where) {
    return {require<double>(v, "re", where), require<double>(v, "im", where)};
}

}  // namespace

std::string canonical_dump(const json &value) {
    std::string out;
    dump_into(value, out, 0);
    out += "\n";
    return out;
}

json bigraph_to_json(const SculptingBigraph &graph) {
    json dots = json::array();
    for (const Dot &dot : graph.dots()) {
        json edges = json::array();
        for (const Edge &e : dot.edges()) {
            edges.push_back(json{
                {"mode", e.spatial_mode},
                {"phase", phase_to_json(e.phase)},
                {"color", json{{"basis", basis_name(e.color.basis)}, {"index", e.color.index}}},
            });
        }
        dots.push_back(json{{"edges", edges}});
    }
    return json{{"N", graph.spatial_count()}, {"d", graph.internal_dim()}, {"dots", dots}};
}

SculptingBigraph bigraph_from_json(const json &value) {
    const char *where = "bigraph";
    if (!value.is_object()) {
        throw FormatError("bigraph: expected a JSON object");
    }
    size_t n = require_index(value, "N", where);
    size_t d = require_index(value, "d", where);
    if (!value.contains("dots") || !value.at("dots").is_array()) {
        throw FormatError("bigraph: 'dots' must be an array");
    }
    std::vector<Dot> dots;
    try {
        for (const json &dot : value.at("dots")) {
            if (!dot.is_object() || !dot.contains("edges") || !dot.at("edges").is_array()) {
                throw FormatError("bigraph: every dot needs an 'edges' array");
            }
            std::vector<Edge> edges;
            for (const json &e : dot.at("edges")) {
                if (!e.is_object()) {
                    throw FormatError("bigraph: edge must be an object");
                }
                Edge edge;
                edge.spatial_mode = require_index(e, "mode", "edge");
                edge.phase = phase_from_json(e.contains("phase") ? e.at("phase") : json(), "edge phase");
                const json &color = e.contains("color") ? e.at("color") : json();
                try {
                    edge.color.basis = parse_basis_name(require<std::string>(color, "basis", "edge color"));
                } catch (const std::invalid_argument &ex) {
                    throw FormatError(std::string("edge color: ") + ex.what());
                }
                edge.color.index = require_index(color, "index", "edge color");
                edges.push_back(edge);
            }
            dots.emplace_back(std::move(edges));
        }
        return SculptingBigraph(n, d, std::move(dots));
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("bigraph: ") + e.what());
    }
}

json circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const Gate &gate : circuit.gates) {
        if (const auto *g = std::get_if<DftPort>(&gate)) {
            gates.push_back(json{{"kind", "dft"}, {"mode", g->spatial_mode}, {"inverse", g->inverse}});
        } else if (const auto *g = std::get_if<PhaseShift>(&gate)) {
            gates.push_back(json{{"kind", "phase"}, {"rail", g->rail}, {"angle", phase_to_json(g->angle)}});
        } else if (const auto *g = std::get_if<BeamSplitter>(&gate)) {
            gates.push_back(json{
                {"kind", "bs"}, {"rail_a", g->rail_a}, {"rail_b", g->rail_b}, {"theta", g->theta}, {"phi", g->phi}});
        }
    }
    json detectors = json::array();
    for (const Detector &det : circuit.detectors) {
        detectors.push_back(json{{"rail", det.rail}, {"required", det.required}});
    }
    json out{
        {"N", circuit.layout.spatial_count()},
        {"d", circuit.layout.internal_dim()},
        {"ancillas", circuit.layout.ancilla_count()},
        {"output_basis", basis_name(circuit.output_basis)},
        {"gates", gates},
        {"detectors", detectors},
    };
    out["source"] = circuit.source ? bigraph_to_json(*circuit.source) : json();
    out["reflectivity"] = circuit.reflectivity ? json(*circuit.reflectivity) : json();
    return out;
}

Circuit circuit_from_json(const json &value) {
    const char *where = "circuit";
    if (!value.is_object()) {
        throw FormatError("circuit: expected a JSON object");
    }
    try {
        ModeLayout layout(
            require_index(value, "N", where), require_index(value, "d", where), require_index(value, "ancillas", where));
        Circuit circuit{layout, {}, {}, InternalBasis::Computational, std::nullopt, std::nullopt};
        try {
            circuit.output_basis = parse_basis_name(require<std::string>(value, "output_basis", where));
        } catch (const std::invalid_argument &e) {
            throw FormatError(std::string("circuit: ") + e.what());
        }
        if (!value.contains("gates") || !value.at("gates").is_array()) {
            throw FormatError("circuit: 'gates' must be an array");
        }
        for (const json &g : value.at("gates")) {
            std::string kind = require<std::string>(g, "kind", "gate");
            if (kind == "dft") {
                circuit.gates.push_back(DftPort{require_index(g, "mode", "gate"), require<bool>(g, "inverse", "gate")});
            } else if (kind == "phase") {
                circuit.gates.push_back(
                    PhaseShift{require_index(g, "rail", "gate"), phase_from_json(g.contains("angle") ? g.at("angle") : json(), "gate angle")});
            } else if (kind == "bs") {
                circuit.gates.push_back(BeamSplitter{
                    require_index(g, "rail_a", "gate"), require_index(g, "rail_b", "gate"),
                    require<double>(g, "theta", "gate"), require<double>(g, "phi", "gate")});
            } else {
                throw FormatError("circuit: unknown gate kind '" + kind + "'");
            }
        }
        if (!value.contains("detectors") || !value.at("detectors").is_array()) {
            throw FormatError("circuit: 'detectors' must be an array");
        }
        for (const json &det : value.at("detectors")) {
            size_t required = require_index(det, "required", "detector");
            if (required > 255) {
                throw FormatError("detector: required count too large");
            }
            circuit.detectors.push_back(Detector{require_index(det, "rail", "detector"), (uint8_t)required});
        }
        if (value.contains("source") && !value.at("source").is_null()) {
            circuit.source = bigraph_from_json(value.at("source"));
        }
        if (value.contains("reflectivity") && !value.at("reflectivity").is_null()) {
            circuit.reflectivity = require<double>(value, "reflectivity", where);
        }
        circuit.validate();
        return circuit;
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("circuit: ") + e.what());
    } catch (const std::out_of_range &e) {
        throw FormatError(std::string("circuit: ") + e.what());
    }
}

json sparse_state_to_json(const SparseState &state) {
    json terms = json::array();
    for (const auto &[basis, amp] : state.terms()) {
        json entry = amp_entry(amp);
        entry["occupations"] = basis.occupations();
        terms.push_back(entry);
    }
    return json{
        {"N", state.layout().spatial_count()},
        {"d", state.layout().internal_dim()},
        {"ancillas", state.layout().ancilla_count()},
        {"terms", terms},
    };
}

SparseState sparse_state_from_json(const json &value) {
    const char *where = "sparse state";
    try {
        ModeLayout layout(
            require_index(value, "N", where), require_index(value, "d", where), require_index(value, "ancillas", where));
        std::vector<SparseState::Term> terms;
        for (const json &t : require<json>(value, "terms", where)) {
            terms.emplace_back(FockBasisState(require<std::vector<uint8_t>>(t, "occupations", where)), amp_from(t, where));
        }
        return SparseState::from_terms(layout, std::move(terms), 0);
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("sparse state: ") + e.what());
    }
}

json qudit_state_to_json(const QuditState &state) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < state.amplitudes().size(); i++) {
        Complex a = state.amplitudes()[i];
        if (a == Complex(0)) {
            continue;
        }
        json entry = amp_entry(a);
        entry["labels"] = state.labels_of((size_t)i);
        amps.push_back(entry);
    }
    return json{
        {"N", state.qudit_count()},
        {"d", state.dim()},
        {"basis", basis_name(state.label_basis())},
        {"amplitudes", amps},
    };
}

QuditState qudit_state_from_json(const json &value) {
    const char *where = "qudit state";
    try {
        size_t n = require_index(value, "N", where);
        size_t d = require_index(value, "d", where);
        InternalBasis basis = parse_basis_name(require<std::string>(value, "basis", where));
        QuditState shape = QuditState::zero(n, d, basis);
        Eigen::VectorXcd amps = shape.amplitudes();
        for (const json &entry : require<json>(value, "amplitudes", where)) {
            amps[(Eigen::Index)shape.index_of(require<std::vector<size_t>>(entry, "labels", where))] = amp_from(entry, where);
        }
        return QuditState(n, d, std::move(amps), basis);
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("qudit state: ") + e.what());
    } catch (const std::out_of_range &e) {
        throw FormatError(std::string("qudit state: ") + e.what());
    }
}

json herald_report_to_json(const HeraldReport &report) {
    json out{
        {"pattern", report.pattern},
        {"postselected", report.postselected},
        {"probability", report.probability},
        {"conditional", sparse_state_to_json(report.conditional)},
    };
    out["qudits"] = report.qudits ? qudit_state_to_json(*report.qudits) : json();
    out["fidelity"] = report.fidelity ? json(*report.fidelity) : json();
    return out;
}

std::string bigraph_to_dot(const SculptingBigraph &graph) {
    static const char *palette[] = {"darkgreen", "orange", "purple", "brown", "magenta", "gray40"};
    size_t d = graph.internal_dim();
    std::stringstream ss;
    ss << "graph sculpting {\n";
    ss << "  // N=" << graph.spatial_count() << " d=" << d << " dots=" << graph.dots().size() << "\n";
    ss << "  node [shape=circle];\n";
    for (size_t j = 0; j < graph.spatial_count(); j++) {
        ss << "  c" << j << " [label=\"" << j << "\"];\n";
    }
    for (size_t i = 0; i < graph.dots().size(); i++) {
        ss << "  v" << i << " [shape=point, width=0.12, label=\"\"];\n";
    }
    for (size_t i = 0; i < graph.dots().size(); i++) {
        for (const Edge &e : graph.dots()[i].edges()) {
            std::string color;
            if (e.color.basis == InternalBasis::Fourier && e.color.index == 0) {
                color = "red";
            } else if (e.color.basis == InternalBasis::Fourier && e.color.index == d - 1) {
                color = "blue";
            } else {
                color = palette[(e.color.index + (e.color.basis == InternalBasis::Fourier ? 3 : 0)) % 6];
            }
            ss << "  v" << i << " -- c" << e.spatial_mode << " [color=" << color << ", tooltip=\"" << e.color.str() << "\"";
            if (!e.phase.is_zero()) {
                ss << ", label=\"" << e.phase.str() << "\"";
            }
            ss << "];\n";
        }
    }
    ss << "}\n";
    return ss.str();
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace sculpt
