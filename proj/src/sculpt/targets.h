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

#ifndef _SCULPT_TARGETS_H
#define _SCULPT_TARGETS_H

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sculpt/bigraph.h"
#include "sculpt/fock.h"

namespace sculpt {

/// Dense N-qudit state over {0..d-1}^N, lexicographic with qudit 0 most significant.
class QuditState {
   public:
    QuditState(size_t qudit_count, size_t dim, Eigen::VectorXcd amplitudes, InternalBasis label_basis);
    static QuditState zero(size_t qudit_count, size_t dim, InternalBasis label_basis = InternalBasis::Computational);

    size_t qudit_count() const {
        return qudit_count_;
    }
    size_t dim() const {
        return dim_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    InternalBasis label_basis() const {
        return label_basis_;
    }

    size_t index_of(const std::vector<size_t> &labels) const;
    std::vector<size_t> labels_of(size_t index) const;
    Complex amplitude(const std::vector<size_t> &labels) const {
        return amplitudes_[(Eigen::Index)index_of(labels)];
    }
    double norm() const {
        return amplitudes_.norm();
    }
    QuditState normalized() const;
    QuditState with_label_basis(InternalBasis basis) const;

    /// Number of amplitudes with modulus above tol.
    size_t support_size(double tol = kCompareTolerance) const;
    std::string str(double tol = kCompareTolerance) const;

   private:
    size_t qudit_count_;
    size_t dim_;
    Eigen::VectorXcd amplitudes_;
    InternalBasis label_basis_;
};

/// sgn(sigma)/sqrt(N!) on every permutation of (0, ..., N-1).
QuditState singlet_state(size_t n);
/// 1/sqrt(N!) on every permutation of (0, ..., N-1).
QuditState dicke_1n_state(size_t n);
/// Qutrit tripartite Dicke pattern: six permutations of 012 plus 2|111>, normalized.
QuditState d33_reference();

/// Raised when a state has bunched (multi-photon-per-mode) weight above tolerance.
class ResidualError : public std::runtime_error {
   public:
    ResidualError(double residual, const std::string &message) : std::runtime_error(message), residual_(residual) {
    }
    double residual() const {
        return residual_;
    }

   private:
    double residual_;
};

struct Extraction {
    QuditState state;
    /// Norm of the terms that are not one-photon-per-mode.
    double residual_norm;
    /// residual_norm divided by the input norm.
    double relative_residual;
};

/// Reads one-photon-per-spatial-mode terms as qudit labels. Every other term
/// (bunched, empty modes, occupied ancillas) counts toward the residual.
///
/// With `read_basis == Fourier`, labels are the Fourier levels m~, i.e. each
/// qudit is transformed by F(m, s) = omega^{m s} / sqrt(d). Throws
/// ResidualError when the relative residual exceeds `tol`.
Extraction extract_qudits(const SparseState &state, InternalBasis read_basis, double tol = kCompareTolerance);

struct PhaseComparison {
    bool equal;
    /// theta with b = exp(i theta) a.
    double phase;
    /// |<a|b>|^2 / (|a|^2 |b|^2).
    double fidelity;
};

/// Decides whether b = exp(i theta) a, taking theta from b's largest component
/// (lowest index on ties) and comparing amplitude-wise within tol.
PhaseComparison equal_up_to_phase(const QuditState &a, const QuditState &b, double tol = kCompareTolerance);

double fidelity(const QuditState &a, const QuditState &b);

/// U applied to every qudit.
QuditState collective_unitary(const QuditState &state, const Eigen::MatrixXcd &unitary);

/// F(m, s) = omega^{m s} / sqrt(d).
Eigen::MatrixXcd dft_matrix(size_t dim);

bool is_unitary(const Eigen::MatrixXcd &m, double tol = 1e-10);

}  // namespace sculpt

#endif
