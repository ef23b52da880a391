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

#ifndef _SCULPT_CIRCUIT_H
#define _SCULPT_CIRCUIT_H

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "sculpt/bigraph.h"
#include "sculpt/fock.h"
#include "sculpt/targets.h"

namespace sculpt {

/// d-mode DFT across rails (j, 0..d-1): rail s -> sum_m omega^{m s}/sqrt(d) rail m.
/// The inverse port applies the adjoint.
struct DftPort {
    size_t spatial_mode;
    bool inverse = false;
    bool operator==(const DftPort &other) const = default;
};

/// a^dagger -> exp(i angle) a^dagger on one rail.
struct PhaseShift {
    size_t rail;
    PiPhase angle;
    bool operator==(const PhaseShift &other) const = default;
};

/// Single-photon transfer [[cos t, -e^{-i phi} sin t], [e^{i phi} sin t, cos t]] on (rail_a, rail_b).
struct BeamSplitter {
    size_t rail_a;
    size_t rail_b;
    double theta;
    double phi = 0;
    bool operator==(const BeamSplitter &other) const = default;
};

using Gate = std::variant<DftPort, PhaseShift, BeamSplitter>;

std::vector<size_t> gate_rails(const Gate &gate, const ModeLayout &layout);
/// Local single-photon matrix over gate_rails(gate), column = input rail.
Eigen::MatrixXcd gate_matrix(const Gate &gate, const ModeLayout &layout);
std::string gate_str(const Gate &gate);

/// Number-resolving detector on one rail; the herald needs exactly `required` photons.
struct Detector {
    size_t rail;
    uint8_t required = 1;
    bool operator==(const Detector &other) const = default;
};

struct Circuit {
    ModeLayout layout;
    std::vector<Gate> gates;
    std::vector<Detector> detectors;
    /// Which qudit labels the output rails (j, 0..d-1) carry.
    InternalBasis output_basis = InternalBasis::Computational;
    /// The bigraph and reflectivity this circuit was compiled from, when known.
    std::optional<SculptingBigraph> source;
    std::optional<double> reflectivity;

    /// Throws std::invalid_argument on out-of-range rails, repeated detector
    /// rails, detectors on system rails, or non-unitary gates.
    void validate() const;
    bool operator==(const Circuit &other) const = default;
};

/// Heralded linear-optical circuit for a bigraph.
///
/// Layout: N*d system rails plus one ancilla rail per dot. Gates: a DftPort per
/// spatial mode, so rail (j, m) carries the Fourier mode m~; then per dot a
/// subtraction gadget. The gadget rotates the dot's (at most two) rails so one
/// working rail carries the dot mode, taps it into the dot's vacuum ancilla with
/// a beam splitter of amplitude reflectivity r, and undoes the rotation.
/// Heralding one photon on the ancilla applies r t^n a_dot, which tends to the
/// ideal subtraction as r -> 0.
Circuit compile_bigraph(const SculptingBigraph &graph, double reflectivity);

/// Product of all gate matrices embedded in the full rail space.
Eigen::MatrixXcd transfer_matrix(const Circuit &circuit);

/// initial_state(N, d) padded with vacuum ancillas.
SparseState circuit_input(const Circuit &circuit);

struct HeraldReport {
    /// Photon counts on the detector rails, in detector order.
    std::vector<uint8_t> pattern;
    /// True when one-photon-per-output-group postselection was also applied.
    bool postselected = false;
    /// Squared norm of the unnormalized conditional state over the input norm squared.
    double probability = 0;
    /// Normalized conditional state on the system rails (zero when probability is 0).
    SparseState conditional;
    std::optional<QuditState> qudits;
    std::optional<double> fidelity;
};

struct SimulationOptions {
    /// Fidelity of the heralded qudit state is reported against this target.
    std::optional<QuditState> target;
    /// Also report the marginal probability of every detector pattern.
    bool all_outcomes = false;
    /// Amplitude pruning threshold during gate application.
    double prune_tolerance = 1e-18;
};

/// Runs the circuit gate by gate in Fock space.
///
/// The first report is always the required herald pattern with output
/// postselection. With all_outcomes, one unpostselected report per observed
/// detector pattern follows, in lexicographic pattern order. Without it,
/// branches are projected onto the herald as soon as a detector rail sees its
/// last gate.
std::vector<HeraldReport> simulate(
    const Circuit &circuit, const SparseState &input, const SimulationOptions &options = {});

/// Ryser's formula.
Complex permanent(const Eigen::MatrixXcd &m);

struct DirectProjection {
    double probability;
    /// Unnormalized heralded amplitudes on one-photon-per-group outputs.
    QuditState amplitudes;
};

/// Heralded, postselected outcome computed from permanents of the transfer
/// matrix, without any Fock-space state propagation.
DirectProjection direct_projection(const Circuit &circuit, const SparseState &input);

struct IdealRun {
    /// |A|Sym>|^2 with unit-normalized dots.
    double weight;
    /// Same quantity from the matching expansion, when the bigraph's colors allow it.
    std::optional<double> oracle_weight;
    /// Normalized, read in the Fourier basis; zero when weight is 0.
    QuditState state;
};

IdealRun ideal_heralded_run(const SculptingBigraph &graph);

struct SweepRow {
    double reflectivity;
    double fidelity;
    double probability;
    /// probability / r^{2 |dots|}.
    double scaled_probability;
};

/// Compiles and simulates the bigraph at each reflectivity; rows keep input order.
std::vector<SweepRow> fidelity_sweep(const SculptingBigraph &graph, std::span<const double> reflectivities, size_t threads = 1);

/// N! sqrt(N!) / (N^N)^N, the closed-form success probability quoted for the
/// N-partite schemes. Reported next to computed values, never asserted.
double closed_form_success_probability(size_t n);
/// Human-readable form; "2*sqrt(6)/3^8" for N = 3.
std::string closed_form_success_expression(size_t n);

}  // namespace sculpt

#endif
