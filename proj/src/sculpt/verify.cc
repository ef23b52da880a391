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

#include "sculpt/verify.h"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sculpt/io.h"
#include "sculpt/protocol.h"

using nlohmann::json;

namespace sculpt {

TargetKind parse_target_kind(const std::string &name) {
    if (name == "singlet") {
        return TargetKind::Singlet;
    }
    if (name == "dicke") {
        return TargetKind::Dicke;
    }
    if (name == "symmetric" || name == "symvariant") {
        return TargetKind::Symmetric;
    }
    throw std::invalid_argument("unknown target '" + name + "' (expected singlet, dicke or symmetric)");
}

const char *target_kind_name(TargetKind kind) {
    switch (kind) {
        case TargetKind::Singlet:
            return "singlet";
        case TargetKind::Dicke:
            return "dicke";
        case TargetKind::Symmetric:
            return "symmetric";
    }
    return "?";
}

BasisMode parse_basis_mode(const std::string &name) {
    if (name == "comp" || name == "computational") {
        return BasisMode::Computational;
    }
    if (name == "fourier") {
        return BasisMode::Fourier;
    }
    if (name == "both") {
        return BasisMode::Both;
    }
    throw std::invalid_argument("unknown basis '" + name + "' (expected comp, fourier or both)");
}

const char *basis_mode_name(BasisMode mode) {
    switch (mode) {
        case BasisMode::Computational:
            return "comp";
        case BasisMode::Fourier:
            return "fourier";
        case BasisMode::Both:
            return "both";
    }
    return "?";
}

bool VerificationReport::passed() const {
    for (const CheckResult &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> VerificationReport::failures() const {
    std::vector<std::string> out;
    for (const CheckResult &c : checks) {
        if (!c.passed) {
            out.push_back(c.name);
        }
    }
    return out;
}

Eigen::MatrixXcd random_unitary(size_t dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index r = 0; r < z.rows(); r++) {
        for (Eigen::Index c = 0; c < z.cols(); c++) {
            z(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    for (Eigen::Index c = 0; c < q.cols(); c++) {
        Complex r = qr.matrixQR()(c, c);
        q.col(c) *= r / std::abs(r);
    }
    return q;
}

VerificationReport verify_bigraph(
    const SculptingBigraph &graph,
    const std::string &scheme,
    TargetKind target,
    BasisMode basis_mode,
    double tol,
    uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    size_t n = graph.spatial_count();
    size_t d = graph.internal_dim();
    VerificationReport report{
        scheme, n, d, target, basis_mode, tol, std::nullopt, std::nullopt, std::nullopt, 0, 0, {}, {}, std::nullopt, 0, {}};
    auto check = [&](std::string name, bool ok, double value, double threshold) {
        report.checks.push_back(CheckResult{std::move(name), ok, value, threshold});
    };

    check("dot_count", graph.has_standard_dot_count(), (double)graph.dots().size(), (double)((d - 1) * n));
    if (!graph.has_standard_dot_count()) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    SparseState sculpted = apply_sculpting(graph, initial_state(n, d));
    report.weight = sculpted.norm_squared();
    check("nonzero", !sculpted.is_zero(), report.weight, 0);
    if (sculpted.is_zero()) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    SparseState psi = normalize(sculpted).first;

    Extraction comp = extract_qudits(psi, InternalBasis::Computational, INFINITY);
    report.residual_norm = comp.relative_residual;
    check("support", comp.relative_residual <= tol, comp.relative_residual, tol);

    if (target != TargetKind::Symmetric && n == d) {
        QuditState reference = target == TargetKind::Singlet ? singlet_state(n) : dicke_1n_state(n);
        std::vector<InternalBasis> bases;
        if (basis_mode != BasisMode::Fourier) {
            bases.push_back(InternalBasis::Computational);
        }
        if (basis_mode != BasisMode::Computational) {
            bases.push_back(InternalBasis::Fourier);
        }
        bool any = false;
        bool all = true;
        for (InternalBasis b : bases) {
            QuditState extracted = b == InternalBasis::Computational
                                       ? comp.state
                                       : collective_unitary(comp.state, dft_matrix(d)).with_label_basis(b);
            PhaseComparison cmp = equal_up_to_phase(reference, extracted, tol);
            bool matched = cmp.fidelity >= 1 - tol;
            report.bases.push_back(BasisResult{b, cmp.fidelity, cmp.phase, matched});
            if (!report.fidelity || cmp.fidelity > *report.fidelity) {
                report.fidelity = cmp.fidelity;
                report.global_phase = cmp.phase;
            }
            if (matched && !report.matching_basis) {
                report.matching_basis = b;
            }
            any |= matched;
            all &= matched;
        }
        bool ok = target == TargetKind::Singlet ? all : any;
        check("fidelity", ok, report.fidelity.value_or(0), 1 - tol);
    } else if (target != TargetKind::Symmetric) {
        check("fidelity", false, 0, 1 - tol);
    }

    double expected = target == TargetKind::Singlet ? -1 : 1;
    for (size_t j = 0; j < n; j++) {
        for (size_t k = j + 1; k < n; k++) {
            Complex overlap = inner(psi, swap_spatial(psi, j, k));
            bool ok = std::abs(overlap - expected) <= tol;
            report.sign_tests.push_back(SignTest{j, k, overlap, expected, ok});
            check("sign(" + std::to_string(j) + "," + std::to_string(k) + ")", ok, overlap.real(), expected);
        }
    }

    try {
        SparseState oracle = state_from_matchings(graph);
        double dev = max_abs_difference(oracle, sculpted);
        report.oracle_max_deviation = dev;
        check("oracle", dev <= tol, dev, tol);
    } catch (const std::invalid_argument &) {
        // Colors outside {0~, (d-1)~}: the matching expansion does not apply.
    }

    if (target == TargetKind::Singlet && n == d) {
        QuditState extracted = comp.state.normalized();
        QuditState rotated = collective_unitary(extracted, random_unitary(d, seed));
        double f = fidelity(extracted, rotated);
        check("covariance", f >= 1 - tol, f, 1 - tol);
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json verification_report_to_json(const VerificationReport &report) {
    json checks = json::array();
    for (const CheckResult &c : report.checks) {
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"threshold", c.threshold}});
    }
    json bases = json::array();
    for (const BasisResult &b : report.bases) {
        bases.push_back(json{{"basis", basis_name(b.basis)}, {"fidelity", b.fidelity}, {"phase", b.phase}, {"matched", b.matched}});
    }
    json signs = json::array();
    for (const SignTest &s : report.sign_tests) {
        signs.push_back(json{
            {"j", s.j}, {"k", s.k}, {"overlap_re", s.overlap.real()}, {"overlap_im", s.overlap.imag()},
            {"expected", s.expected}, {"passed", s.passed}});
    }
    json out{
        {"scheme", report.scheme},
        {"N", report.spatial_count},
        {"d", report.internal_dim},
        {"target", target_kind_name(report.target)},
        {"basis", basis_mode_name(report.basis_mode)},
        {"tolerance", report.tolerance},
        {"residual_norm", report.residual_norm},
        {"weight", report.weight},
        {"bases", bases},
        {"sign_tests", signs},
        {"seconds", report.seconds},
        {"checks", checks},
        {"passed", report.passed()},
        {"failures", report.failures()},
    };
    out["fidelity"] = report.fidelity ? json(*report.fidelity) : json();
    out["global_phase"] = report.global_phase ? json(*report.global_phase) : json();
    out["matching_basis"] = report.matching_basis ? json(basis_name(*report.matching_basis)) : json();
    out["oracle_max_deviation"] = report.oracle_max_deviation ? json(*report.oracle_max_deviation) : json();
    return out;
}

}  // namespace sculpt
