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

#include "sculpt/circuit.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "sculpt/protocol.h"

namespace sculpt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool one_photon_per_group(const FockBasisState &basis, const ModeLayout &layout) {
    size_t d = layout.internal_dim();
    for (size_t j = 0; j < layout.spatial_count(); j++) {
        size_t total = 0;
        for (size_t s = 0; s < d; s++) {
            total += basis[j * d + s];
        }
        if (total != 1) {
            return false;
        }
    }
    return true;
}

std::vector<uint8_t> detector_pattern(const FockBasisState &basis, const std::vector<Detector> &detectors) {
    std::vector<uint8_t> pattern;
    pattern.reserve(detectors.size());
    for (const Detector &det : detectors) {
        pattern.push_back(basis[det.rail]);
    }
    return pattern;
}

/// Drops the ancilla rails. Callers must already have fixed the ancilla pattern.
SparseState to_system_rails(const std::vector<SparseState::Term> &terms, const ModeLayout &layout) {
    ModeLayout out_layout = layout.without_ancillas();
    size_t rails = out_layout.rail_count();
    std::vector<SparseState::Term> out;
    out.reserve(terms.size());
    for (const auto &[basis, amp] : terms) {
        std::vector<uint8_t> occ(basis.occupations().begin(), basis.occupations().begin() + (std::ptrdiff_t)rails);
        out.emplace_back(FockBasisState(std::move(occ)), amp);
    }
    return SparseState::from_terms(out_layout, std::move(out), 0);
}

double factorial(size_t n) {
    return std::tgamma((double)n + 1);
}

}  // namespace

std::vector<size_t> gate_rails(const Gate &gate, const ModeLayout &layout) {
    return std::visit(
        overloaded{
            [&](const DftPort &g) {
                std::vector<size_t> rails;
                for (size_t s = 0; s < layout.internal_dim(); s++) {
                    rails.push_back(layout.rail_of(g.spatial_mode, s));
                }
                return rails;
            },
            [&](const PhaseShift &g) {
                return std::vector<size_t>{g.rail};
            },
            [&](const BeamSplitter &g) {
                return std::vector<size_t>{g.rail_a, g.rail_b};
            },
        },
        gate);
}

Eigen::MatrixXcd gate_matrix(const Gate &gate, const ModeLayout &layout) {
    return std::visit(
        overloaded{
            [&](const DftPort &g) -> Eigen::MatrixXcd {
                Eigen::MatrixXcd f = dft_matrix(layout.internal_dim());
                if (g.inverse) {
                    return f.adjoint();
                }
                return f;
            },
            [&](const PhaseShift &g) -> Eigen::MatrixXcd {
                Eigen::MatrixXcd m(1, 1);
                m(0, 0) = g.angle.unit();
                return m;
            },
            [&](const BeamSplitter &g) -> Eigen::MatrixXcd {
                Eigen::MatrixXcd m(2, 2);
                double c = std::cos(g.theta);
                double s = std::sin(g.theta);
                m(0, 0) = c;
                m(0, 1) = -std::polar(s, -g.phi);
                m(1, 0) = std::polar(s, g.phi);
                m(1, 1) = c;
                return m;
            },
        },
        gate);
}

std::string gate_str(const Gate &gate) {
    std::stringstream ss;
    std::visit(
        overloaded{
            [&](const DftPort &g) {
                ss << (g.inverse ? "IDFT " : "DFT ") << g.spatial_mode;
            },
            [&](const PhaseShift &g) {
                ss << "PHASE " << g.rail << " " << g.angle.str();
            },
            [&](const BeamSplitter &g) {
                ss << "BS " << g.rail_a << " " << g.rail_b << " theta=" << g.theta << " phi=" << g.phi;
            },
        },
        gate);
    return ss.str();
}

void Circuit::validate() const {
    for (size_t i = 0; i < gates.size(); i++) {
        std::vector<size_t> rails;
        try {
            rails = gate_rails(gates[i], layout);
        } catch (const std::out_of_range &e) {
            throw std::invalid_argument("gate " + std::to_string(i) + ": " + e.what());
        }
        std::unordered_set<size_t> seen;
        for (size_t r : rails) {
            if (r >= layout.rail_count()) {
                throw std::invalid_argument("gate " + std::to_string(i) + " uses rail " + std::to_string(r) + " outside " + layout.str());
            }
            if (!seen.insert(r).second) {
                throw std::invalid_argument("gate " + std::to_string(i) + " uses rail " + std::to_string(r) + " twice");
            }
        }
        if (!is_unitary(gate_matrix(gates[i], layout), 1e-12)) {
            throw std::invalid_argument("gate " + std::to_string(i) + " is not unitary");
        }
    }
    std::unordered_set<size_t> det_rails;
    for (const Detector &det : detectors) {
        if (det.rail < layout.system_rail_count() || det.rail >= layout.rail_count()) {
            throw std::invalid_argument("detector rail " + std::to_string(det.rail) + " is not an ancilla rail");
        }
        if (!det_rails.insert(det.rail).second) {
            throw std::invalid_argument("detector rail " + std::to_string(det.rail) + " listed twice");
        }
    }
}

Circuit compile_bigraph(const SculptingBigraph &graph, double reflectivity) {
    if (!(reflectivity > 0 && reflectivity < 1)) {
        throw std::invalid_argument("reflectivity must lie in (0, 1), got " + std::to_string(reflectivity));
    }
    size_t n = graph.spatial_count();
    size_t d = graph.internal_dim();
    const auto &dots = graph.dots();
    Circuit circuit{ModeLayout(n, d, dots.size()), {}, {}, InternalBasis::Fourier, graph, reflectivity};
    const ModeLayout &layout = circuit.layout;

    for (size_t j = 0; j < n; j++) {
        circuit.gates.push_back(DftPort{j, false});
    }

    double tap = std::asin(reflectivity);
    for (size_t i = 0; i < dots.size(); i++) {
        const Dot &dot = dots[i];
        if (dot.edges().size() > 2) {
            throw std::invalid_argument(
                "dot " + std::to_string(i) + " has " + std::to_string(dot.edges().size()) +
                " edges; the subtraction gadget supports dots with at most 2 edges");
        }

        // Dot mode in the post-DFT frame: rail -> (magnitude, phase).
        std::map<size_t, std::pair<double, PiPhase>> support;
        for (const Edge &e : dot.edges()) {
            double amp = dot.edge_amplitude();
            if (e.color.basis == InternalBasis::Fourier) {
                support[layout.rail_of(e.spatial_mode, e.color.index)] = {amp, e.phase};
            } else {
                // a_s = (1/sqrt d) sum_m omega^{-m s} b_m after the port.
                for (size_t m = 0; m < d; m++) {
                    PiPhase shift(-2 * (int64_t)((m * e.color.index) % d), (int64_t)d);
                    support[layout.rail_of(e.spatial_mode, m)] = {amp / std::sqrt((double)d), e.phase + shift};
                }
            }
        }
        if (support.size() > 2) {
            throw std::invalid_argument(
                "dot " + std::to_string(i) + " spans " + std::to_string(support.size()) +
                " rails after the DFT ports; the subtraction gadget supports at most 2");
        }

        size_t ancilla = layout.ancilla_rail(i);
        auto it = support.begin();
        size_t rail_a = it->first;
        if (support.size() == 1) {
            circuit.gates.push_back(BeamSplitter{rail_a, ancilla, tap, 0});
        } else {
            auto [mag_a, phase_a] = it->second;
            ++it;
            size_t rail_b = it->first;
            auto [mag_b, phase_b] = it->second;
            // Row a of (BS . Phase_b) must be proportional to (c_a, c_b).
            PiPhase gamma = PiPhase::pi() + phase_b - phase_a;
            double theta = std::atan2(mag_b, mag_a);
            if (!gamma.is_zero()) {
                circuit.gates.push_back(PhaseShift{rail_b, gamma});
            }
            circuit.gates.push_back(BeamSplitter{rail_a, rail_b, theta, 0});
            circuit.gates.push_back(BeamSplitter{rail_a, ancilla, tap, 0});
            circuit.gates.push_back(BeamSplitter{rail_a, rail_b, -theta, 0});
            if (!gamma.is_zero()) {
                circuit.gates.push_back(PhaseShift{rail_b, -gamma});
            }
        }
        circuit.detectors.push_back(Detector{ancilla, 1});
    }
    return circuit;
}

Eigen::MatrixXcd transfer_matrix(const Circuit &circuit) {
    auto m = (Eigen::Index)circuit.layout.rail_count();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(m, m);
    for (const Gate &gate : circuit.gates) {
        std::vector<size_t> rails = gate_rails(gate, circuit.layout);
        Eigen::MatrixXcd local = gate_matrix(gate, circuit.layout);
        Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Identity(m, m);
        for (size_t r = 0; r < rails.size(); r++) {
            for (size_t c = 0; c < rails.size(); c++) {
                embedded((Eigen::Index)rails[r], (Eigen::Index)rails[c]) = local((Eigen::Index)r, (Eigen::Index)c);
            }
        }
        total = embedded * total;
    }
    return total;
}

SparseState circuit_input(const Circuit &circuit) {
    std::vector<uint8_t> occ(circuit.layout.rail_count(), 0);
    for (size_t r = 0; r < circuit.layout.system_rail_count(); r++) {
        occ[r] = 1;
    }
    return basis_state(circuit.layout, std::move(occ));
}

std::vector<HeraldReport> simulate(const Circuit &circuit, const SparseState &input, const SimulationOptions &options) {
    circuit.validate();
    if (!(input.layout() == circuit.layout)) {
        throw std::invalid_argument(
            "input layout " + input.layout().str() + " does not match circuit layout " + circuit.layout.str());
    }
    double input_norm_sq = input.norm_squared();
    if (input_norm_sq == 0) {
        throw std::invalid_argument("cannot simulate the zero state");
    }
    const ModeLayout &layout = circuit.layout;
    std::vector<uint8_t> required;
    for (const Detector &det : circuit.detectors) {
        required.push_back(det.required);
    }

    // Early herald projection: after a detector rail's last gate nothing changes it.
    std::vector<std::vector<size_t>> settle_after(circuit.gates.size() + 1);
    for (size_t k = 0; k < circuit.detectors.size(); k++) {
        size_t last = 0;
        for (size_t g = 0; g < circuit.gates.size(); g++) {
            for (size_t r : gate_rails(circuit.gates[g], layout)) {
                if (r == circuit.detectors[k].rail) {
                    last = g + 1;
                }
            }
        }
        settle_after[last].push_back(k);
    }
    auto project = [&](const SparseState &state, size_t stage) {
        if (options.all_outcomes || settle_after[stage].empty()) {
            return state;
        }
        return filter(state, [&](const FockBasisState &basis) {
            for (size_t k : settle_after[stage]) {
                if (basis[circuit.detectors[k].rail] != circuit.detectors[k].required) {
                    return false;
                }
            }
            return true;
        });
    };

    SparseState state = project(input, 0);
    for (size_t g = 0; g < circuit.gates.size(); g++) {
        std::vector<size_t> rails = gate_rails(circuit.gates[g], layout);
        state = apply_mode_unitary(state, rails, gate_matrix(circuit.gates[g], layout), options.prune_tolerance);
        state = project(state, g + 1);
    }

    std::vector<SparseState::Term> heralded;
    for (const auto &term : state.terms()) {
        if (detector_pattern(term.first, circuit.detectors) == required && one_photon_per_group(term.first, layout)) {
            heralded.push_back(term);
        }
    }
    SparseState conditional = to_system_rails(heralded, layout);
    double probability = conditional.norm_squared() / input_norm_sq;

    std::vector<HeraldReport> reports;
    HeraldReport main{required, true, probability, conditional, std::nullopt, std::nullopt};
    if (!conditional.is_zero()) {
        main.conditional = normalize(conditional).first;
        Extraction ex = extract_qudits(main.conditional, InternalBasis::Computational, 1.0);
        main.qudits = ex.state.with_label_basis(circuit.output_basis);
        if (options.target.has_value()) {
            main.fidelity = fidelity(*options.target, *main.qudits);
        }
    }
    reports.push_back(std::move(main));

    if (options.all_outcomes) {
        std::map<std::vector<uint8_t>, std::vector<SparseState::Term>> by_pattern;
        for (const auto &term : state.terms()) {
            by_pattern[detector_pattern(term.first, circuit.detectors)].push_back(term);
        }
        for (const auto &[pattern, terms] : by_pattern) {
            SparseState cond = to_system_rails(terms, layout);
            double p = cond.norm_squared() / input_norm_sq;
            HeraldReport r{pattern, false, p, cond, std::nullopt, std::nullopt};
            if (!cond.is_zero()) {
                r.conditional = normalize(cond).first;
            }
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

Complex permanent(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("permanent needs a square matrix");
    }
    auto n = (size_t)m.rows();
    if (n == 0) {
        return 1;
    }
    if (n > 30) {
        throw std::invalid_argument("permanent size too large");
    }
    // Gray-code Ryser: perm = (-1)^n sum_S (-1)^{|S|} prod_i sum_{j in S} m_ij.
    Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero((Eigen::Index)n);
    Complex total = 0;
    uint64_t gray = 0;
    for (uint64_t k = 1; k < (uint64_t{1} << n); k++) {
        int bit = std::countr_zero(k);
        uint64_t mask = uint64_t{1} << bit;
        gray ^= mask;
        if (gray & mask) {
            row_sums += m.col(bit);
        } else {
            row_sums -= m.col(bit);
        }
        Complex prod = row_sums.prod();
        total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
    }
    return (n % 2 == 0) ? total : -total;
}

DirectProjection direct_projection(const Circuit &circuit, const SparseState &input) {
    circuit.validate();
    const ModeLayout &layout = circuit.layout;
    if (!(input.layout() == layout)) {
        throw std::invalid_argument("input layout does not match circuit layout");
    }
    std::vector<uint8_t> ancilla_out(layout.rail_count(), 0);
    std::unordered_set<size_t> detected;
    for (const Detector &det : circuit.detectors) {
        ancilla_out[det.rail] = det.required;
        detected.insert(det.rail);
    }
    for (size_t a = 0; a < layout.ancilla_count(); a++) {
        if (!detected.count(layout.ancilla_rail(a))) {
            throw std::invalid_argument("direct projection needs a detector on every ancilla rail");
        }
    }

    Eigen::MatrixXcd u = transfer_matrix(circuit);
    size_t n = layout.spatial_count();
    size_t d = layout.internal_dim();
    QuditState amps = QuditState::zero(n, d, circuit.output_basis);
    Eigen::VectorXcd values = Eigen::VectorXcd::Zero(amps.amplitudes().size());

    auto rows_of = [](const std::vector<uint8_t> &occ) {
        std::vector<Eigen::Index> idx;
        double norm = 1;
        for (size_t r = 0; r < occ.size(); r++) {
            for (uint8_t c = 0; c < occ[r]; c++) {
                idx.push_back((Eigen::Index)r);
            }
            norm *= factorial(occ[r]);
        }
        return std::pair{idx, norm};
    };

    for (size_t index = 0; index < (size_t)values.size(); index++) {
        std::vector<size_t> labels = amps.labels_of(index);
        std::vector<uint8_t> out = ancilla_out;
        for (size_t j = 0; j < n; j++) {
            out[layout.rail_of(j, labels[j])] = 1;
        }
        auto [out_idx, out_norm] = rows_of(out);
        Complex amp = 0;
        for (const auto &[basis, in_amp] : input.terms()) {
            auto [in_idx, in_norm] = rows_of(basis.occupations());
            if (in_idx.size() != out_idx.size()) {
                continue;
            }
            Eigen::MatrixXcd sub(out_idx.size(), in_idx.size());
            for (size_t r = 0; r < out_idx.size(); r++) {
                for (size_t c = 0; c < in_idx.size(); c++) {
                    sub((Eigen::Index)r, (Eigen::Index)c) = u(out_idx[r], in_idx[c]);
                }
            }
            amp += in_amp * permanent(sub) / std::sqrt(out_norm * in_norm);
        }
        values[(Eigen::Index)index] = amp;
    }
    double probability = values.squaredNorm() / input.norm_squared();
    return DirectProjection{probability, QuditState(n, d, std::move(values), circuit.output_basis)};
}

IdealRun ideal_heralded_run(const SculptingBigraph &graph) {
    graph.require_standard_dot_count();
    size_t n = graph.spatial_count();
    size_t d = graph.internal_dim();
    SparseState sculpted = apply_sculpting(graph, initial_state(n, d));
    IdealRun run{sculpted.norm_squared(), std::nullopt, QuditState::zero(n, d, InternalBasis::Fourier)};
    try {
        run.oracle_weight = state_from_matchings(graph).norm_squared();
    } catch (const std::invalid_argument &) {
        // Colors outside {0~, (d-1)~}: no matching expansion.
    }
    if (!sculpted.is_zero()) {
        run.state = extract_qudits(normalize(sculpted).first, InternalBasis::Fourier).state;
    }
    return run;
}

std::vector<SweepRow> fidelity_sweep(const SculptingBigraph &graph, std::span<const double> reflectivities, size_t threads) {
    IdealRun ideal = ideal_heralded_run(graph);
    std::vector<SweepRow> rows(reflectivities.size());
    double exponent = 2.0 * (double)graph.dots().size();
    auto run_point = [&](size_t i) {
        double r = reflectivities[i];
        Circuit circuit = compile_bigraph(graph, r);
        SimulationOptions options;
        options.target = ideal.state;
        HeraldReport report = simulate(circuit, circuit_input(circuit), options).front();
        rows[i] = SweepRow{r, report.fidelity.value_or(0), report.probability, report.probability / std::pow(r, exponent)};
    };
    threads = std::max<size_t>(1, std::min(threads, reflectivities.size()));
    if (threads == 1) {
        for (size_t i = 0; i < reflectivities.size(); i++) {
            run_point(i);
        }
        return rows;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = next++; i < reflectivities.size(); i = next++) {
                    run_point(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

double closed_form_success_probability(size_t n) {
    double f = factorial(n);
    return f * std::sqrt(f) / std::pow((double)n, (double)(n * n));
}

std::string closed_form_success_expression(size_t n) {
    if (n == 3) {
        return "2*sqrt(6)/3^8";
    }
    std::string ns = std::to_string(n);
    return ns + "!*sqrt(" + ns + "!)/(" + ns + "^" + ns + ")^" + ns;
}

}  // namespace sculpt
