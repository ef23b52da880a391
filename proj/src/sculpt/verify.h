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

#ifndef _SCULPT_VERIFY_H
#define _SCULPT_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sculpt/bigraph.h"
#include "sculpt/targets.h"

namespace sculpt {

enum class TargetKind { Singlet, Dicke, Symmetric };
enum class BasisMode { Computational, Fourier, Both };

TargetKind parse_target_kind(const std::string &name);
const char *target_kind_name(TargetKind kind);
BasisMode parse_basis_mode(const std::string &name);
const char *basis_mode_name(BasisMode mode);

struct CheckResult {
    std::string name;
    bool passed;
    double value;
    double threshold;
};

struct BasisResult {
    InternalBasis basis;
    double fidelity;
    double phase;
    bool matched;
};

struct SignTest {
    size_t j;
    size_t k;
    Complex overlap;
    double expected;
    bool passed;
};

struct VerificationReport {
    std::string scheme;
    size_t spatial_count;
    size_t internal_dim;
    TargetKind target;
    BasisMode basis_mode;
    double tolerance;
    /// Best fidelity over the checked bases; absent for the symmetric target.
    std::optional<double> fidelity;
    std::optional<double> global_phase;
    std::optional<InternalBasis> matching_basis;
    double residual_norm;
    double weight;
    std::vector<BasisResult> bases;
    std::vector<SignTest> sign_tests;
    std::optional<double> oracle_max_deviation;
    double seconds;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Names of failed checks, in check order.
    std::vector<std::string> failures() const;
};

/// Sculpts initial_state(N, d) with the graph and checks it against the target:
/// bunched residual, fidelity per requested basis, sign under every circle
/// transposition, matching-oracle agreement, and (singlet only) covariance
/// under a random collective unitary drawn from `seed`.
///
/// Singlet needs every requested basis to match; dicke needs at least one.
VerificationReport verify_bigraph(
    const SculptingBigraph &graph,
    const std::string &scheme,
    TargetKind target,
    BasisMode basis_mode,
    double tol = kCompareTolerance,
    uint64_t seed = 1);

nlohmann::json verification_report_to_json(const VerificationReport &report);

/// Haar-random d x d unitary (QR of a complex Gaussian matrix with phase fix).
Eigen::MatrixXcd random_unitary(size_t dim, uint64_t seed);

}  // namespace sculpt

#endif
