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

// sculpt: build, verify, compile and simulate sculpting bigraphs.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input or arguments.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sculpt/bigraph.h"
#include "sculpt/circuit.h"
#include "sculpt/io.h"
#include "sculpt/protocol.h"
#include "sculpt/verify.h"

using nlohmann::json;
using namespace sculpt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

/// Probability agreement required between the Fock simulation and the permanent route.
constexpr double kProjectionTolerance = 1e-12;

size_t thread_cap() {
    const char *env = std::getenv("SCULPT_THREADS");
    if (env == nullptr) {
        return 1;
    }
    try {
        long v = std::stol(env);
        return v < 1 ? 1 : (size_t)v;
    } catch (const std::exception &) {
        return 1;
    }
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

SculptingBigraph load_bigraph(const std::string &path) {
    return bigraph_from_json(read_json_file(path));
}

std::string stem_of(const std::string &path) {
    size_t slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

int cmd_scheme(const std::string &type, size_t n, const std::string &out) {
    SculptingBigraph graph = [&] {
        if (type == "singlet") {
            return singlet_bigraph(n);
        }
        if (type == "dicke") {
            return dicke_bigraph(n);
        }
        if (type == "symvariant") {
            return symmetric_variant_bigraph(n);
        }
        throw std::invalid_argument("unknown scheme type '" + type + "' (expected singlet, dicke or symvariant)");
    }();
    emit(canonical_dump(bigraph_to_json(graph)), out);
    return kExitOk;
}

int cmd_verify(
    const std::string &path, const std::string &target, double tol, const std::string &basis, uint64_t seed,
    const std::string &out) {
    TargetKind kind = parse_target_kind(target);
    BasisMode mode = parse_basis_mode(basis);
    if (!(tol > 0)) {
        throw std::invalid_argument("--tol must be positive");
    }
    SculptingBigraph graph = load_bigraph(path);
    VerificationReport report = verify_bigraph(graph, stem_of(path), kind, mode, tol, seed);
    emit(canonical_dump(verification_report_to_json(report)), out);
    if (!report.passed()) {
        std::cerr << "verification failed:";
        for (const std::string &name : report.failures()) {
            std::cerr << " " << name;
        }
        std::cerr << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_matchings(const std::string &path, const std::string &out) {
    SculptingBigraph graph = load_bigraph(path);
    std::vector<Matching> matchings = enumerate_matchings(graph);
    json list = json::array();
    for (const Matching &m : matchings) {
        json circles = json::array();
        for (size_t i = 0; i < m.edge_choice.size(); i++) {
            circles.push_back(graph.dots()[i].edges()[m.edge_choice[i]].spatial_mode);
        }
        list.push_back(json{{"edge_choice", m.edge_choice}, {"circles", circles}, {"text", m.str(graph)}});
    }
    emit(canonical_dump(json{{"count", matchings.size()}, {"matchings", list}}), out);
    return kExitOk;
}

int cmd_compile(const std::string &path, double reflectivity, const std::string &out) {
    SculptingBigraph graph = load_bigraph(path);
    Circuit circuit = compile_bigraph(graph, reflectivity);
    emit(canonical_dump(circuit_to_json(circuit)), out);
    return kExitOk;
}

int cmd_simulate(const std::string &path, const std::vector<double> &sweep, bool all_outcomes, const std::string &out) {
    Circuit circuit = circuit_from_json(read_json_file(path));
    for (double r : sweep) {
        if (!(r > 0 && r < 1)) {
            throw std::invalid_argument("sweep reflectivity " + std::to_string(r) + " outside (0, 1)");
        }
    }
    if (!sweep.empty() && !circuit.source) {
        throw std::invalid_argument("--sweep needs a circuit compiled from a bigraph (missing 'source')");
    }

    const ModeLayout &layout = circuit.layout;
    json report{
        {"circuit",
         json{
             {"N", layout.spatial_count()},
             {"d", layout.internal_dim()},
             {"ancillas", layout.ancilla_count()},
             {"rails", layout.rail_count()},
             {"gates", circuit.gates.size()},
             {"detectors", circuit.detectors.size()},
             {"output_basis", basis_name(circuit.output_basis)},
         }},
    };
    report["reflectivity"] = circuit.reflectivity ? json(*circuit.reflectivity) : json();

    SimulationOptions options;
    options.all_outcomes = all_outcomes;
    std::optional<IdealRun> ideal;
    if (circuit.source) {
        ideal = ideal_heralded_run(*circuit.source);
        options.target = ideal->state;
        report["ideal"] = json{
            {"weight", ideal->weight},
            {"oracle_weight", ideal->oracle_weight ? json(*ideal->oracle_weight) : json()},
            {"state", qudit_state_to_json(ideal->state)},
        };
    }

    SparseState input = circuit_input(circuit);
    std::vector<HeraldReport> reports = simulate(circuit, input, options);
    const HeraldReport &herald = reports.front();
    report["herald"] = herald_report_to_json(herald);

    bool every_ancilla_detected = circuit.detectors.size() == layout.ancilla_count();
    if (every_ancilla_detected) {
        DirectProjection direct = direct_projection(circuit, input);
        double diff = std::abs(direct.probability - herald.probability);
        report["direct_projection"] = json{
            {"probability", direct.probability},
            {"abs_difference", diff},
            {"tolerance", kProjectionTolerance},
            {"consistent", diff <= kProjectionTolerance},
        };
    }

    if (all_outcomes) {
        json outcomes = json::array();
        double total = 0;
        for (size_t i = 1; i < reports.size(); i++) {
            outcomes.push_back(json{{"pattern", reports[i].pattern}, {"probability", reports[i].probability}});
            total += reports[i].probability;
        }
        report["outcomes"] = outcomes;
        report["outcome_probability_sum"] = total;
    }

    size_t n = layout.spatial_count();
    if (n == layout.internal_dim() && n >= 2) {
        double closed = closed_form_success_probability(n);
        json ref{
            {"expression", closed_form_success_expression(n)},
            {"value", closed},
            {"herald_probability_ratio", herald.probability / closed},
        };
        if (ideal) {
            ref["weight_ratio"] = ideal->weight / closed;
        }
        report["reference"] = ref;
    }

    if (!sweep.empty()) {
        std::vector<SweepRow> rows = fidelity_sweep(*circuit.source, sweep, thread_cap());
        json table = json::array();
        for (const SweepRow &row : rows) {
            table.push_back(json{
                {"reflectivity", row.reflectivity},
                {"fidelity", row.fidelity},
                {"probability", row.probability},
                {"scaled_probability", row.scaled_probability},
            });
        }
        report["sweep"] = table;
    }

    emit(canonical_dump(report), out);
    return kExitOk;
}

int cmd_export_dot(const std::string &path, const std::string &out) {
    emit(bigraph_to_dot(load_bigraph(path)), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sculpting-bigraph simulator for heralded qudit entanglement"};
    app.require_subcommand(1);

    std::string out;
    std::string type;
    size_t n = 0;
    std::string path;
    std::string target;
    double tol = kCompareTolerance;
    std::string basis = "both";
    uint64_t seed = 1;
    double reflectivity = 0.1;
    std::vector<double> sweep;
    bool all_outcomes = false;

    auto *scheme = app.add_subcommand("scheme", "Write a built-in sculpting bigraph as JSON");
    scheme->add_option("--type", type, "singlet | dicke | symvariant")->required();
    scheme->add_option("--n", n, "Number of parties (d = N)")->required()->check(CLI::Range(2, 64));
    scheme->add_option("--out", out, "Output path (default stdout)");

    auto *verify = app.add_subcommand("verify", "Sculpt a bigraph and check the result against a target");
    verify->add_option("graph", path, "Bigraph JSON")->required();
    verify->add_option("--target,--type", target, "singlet | dicke | symmetric")->required();
    verify->add_option("--tol", tol, "Comparison tolerance");
    verify->add_option("--basis", basis, "comp | fourier | both");
    verify->add_option("--seed", seed, "Seed for the random covariance check");
    verify->add_option("--out", out, "Report path (default stdout)");

    auto *matchings = app.add_subcommand("matchings", "List the (d-1)-to-one matchings of a bigraph");
    matchings->add_option("graph", path, "Bigraph JSON")->required();
    matchings->add_option("--out", out, "Output path (default stdout)");

    auto *compile = app.add_subcommand("compile", "Compile a bigraph into a heralded linear-optical circuit");
    compile->add_option("graph", path, "Bigraph JSON")->required();
    compile->add_option("--reflectivity", reflectivity, "Tap beam-splitter amplitude reflectivity in (0, 1)");
    compile->add_option("--out", out, "Output path (default stdout)");

    auto *simulate_cmd = app.add_subcommand("simulate", "Simulate a compiled circuit in Fock space");
    simulate_cmd->add_option("circuit", path, "Circuit JSON")->required();
    simulate_cmd->add_option("--sweep", sweep, "Comma-separated reflectivities to recompile and simulate")
        ->delimiter(',');
    simulate_cmd->add_flag("--all-outcomes", all_outcomes, "Report every detector pattern");
    simulate_cmd->add_option("--out", out, "Report path (default stdout)");

    auto *export_dot = app.add_subcommand("export-dot", "Render a bigraph as Graphviz DOT");
    export_dot->add_option("graph", path, "Bigraph JSON")->required();
    export_dot->add_option("--out", out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*scheme) {
            return cmd_scheme(type, n, out);
        }
        if (*verify) {
            return cmd_verify(path, target, tol, basis, seed, out);
        }
        if (*matchings) {
            return cmd_matchings(path, out);
        }
        if (*compile) {
            return cmd_compile(path, reflectivity, out);
        }
        if (*simulate_cmd) {
            return cmd_simulate(path, sweep, all_outcomes, out);
        }
        if (*export_dot) {
            return cmd_export_dot(path, out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
