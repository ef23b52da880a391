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

#include "sculpt/targets.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sculpt {

namespace {

size_t ipow(size_t base, size_t exp) {
    size_t r = 1;
    while (exp--) {
        r *= base;
    }
    return r;
}

int permutation_sign(std::vector<size_t> perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); i++) {
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    }
    return sign;
}

QuditState permutation_state(size_t n, bool signed_terms) {
    if (n < 2) {
        throw std::invalid_argument("permutation target needs N >= 2");
    }
    QuditState result = QuditState::zero(n, n);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero((Eigen::Index)ipow(n, n));
    double amp = 1 / std::sqrt(std::tgamma((double)n + 1));
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    do {
        double sign = signed_terms ? permutation_sign(perm) : 1;
        amps[(Eigen::Index)result.index_of(perm)] = sign * amp;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return QuditState(n, n, std::move(amps), InternalBasis::Computational);
}

}  // namespace

QuditState::QuditState(size_t qudit_count, size_t dim, Eigen::VectorXcd amplitudes, InternalBasis label_basis)
    : qudit_count_(qudit_count), dim_(dim), amplitudes_(std::move(amplitudes)), label_basis_(label_basis) {
    if (qudit_count < 1 || dim < 2) {
        throw std::invalid_argument("qudit state needs N >= 1 and d >= 2");
    }
    if ((size_t)amplitudes_.size() != ipow(dim, qudit_count)) {
        throw std::invalid_argument("qudit amplitude vector must have length d^N");
    }
    if (!amplitudes_.allFinite()) {
        throw std::invalid_argument("qudit amplitudes must be finite");
    }
}

QuditState QuditState::zero(size_t qudit_count, size_t dim, InternalBasis label_basis) {
    return QuditState(
        qudit_count, dim, Eigen::VectorXcd::Zero((Eigen::Index)ipow(dim, qudit_count)), label_basis);
}

size_t QuditState::index_of(const std::vector<size_t> &labels) const {
    if (labels.size() != qudit_count_) {
        throw std::invalid_argument("label count does not match qudit count");
    }
    size_t index = 0;
    for (size_t label : labels) {
        if (label >= dim_) {
            throw std::out_of_range("qudit label out of range");
        }
        index = index * dim_ + label;
    }
    return index;
}

std::vector<size_t> QuditState::labels_of(size_t index) const {
    std::vector<size_t> labels(qudit_count_);
    for (size_t q = qudit_count_; q-- > 0;) {
        labels[q] = index % dim_;
        index /= dim_;
    }
    return labels;
}

QuditState QuditState::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero qudit state");
    }
    return QuditState(qudit_count_, dim_, amplitudes_ / n, label_basis_);
}

QuditState QuditState::with_label_basis(InternalBasis basis) const {
    return QuditState(qudit_count_, dim_, amplitudes_, basis);
}

size_t QuditState::support_size(double tol) const {
    size_t count = 0;
    for (Eigen::Index i = 0; i < amplitudes_.size(); i++) {
        count += std::abs(amplitudes_[i]) > tol;
    }
    return count;
}

std::string QuditState::str(double tol) const {
    std::stringstream ss;
    bool first = true;
    for (Eigen::Index i = 0; i < amplitudes_.size(); i++) {
        if (std::abs(amplitudes_[i]) <= tol) {
            continue;
        }
        if (!first) {
            ss << " + ";
        }
        first = false;
        ss << "(" << amplitudes_[i].real() << (amplitudes_[i].imag() < 0 ? "" : "+") << amplitudes_[i].imag() << "i)|";
        for (size_t label : labels_of((size_t)i)) {
            ss << label;
        }
        ss << (label_basis_ == InternalBasis::Fourier ? ">~" : ">");
    }
    return first ? "0" : ss.str();
}

QuditState singlet_state(size_t n) {
    return permutation_state(n, true);
}

QuditState dicke_1n_state(size_t n) {
    return permutation_state(n, false);
}

QuditState d33_reference() {
    Eigen::VectorXcd amps = dicke_1n_state(3).amplitudes() * std::sqrt(6.0);
    QuditState shape(3, 3, amps, InternalBasis::Computational);
    amps[(Eigen::Index)shape.index_of({1, 1, 1})] = 2;
    return QuditState(3, 3, amps, InternalBasis::Computational).normalized();
}

Extraction extract_qudits(const SparseState &state, InternalBasis read_basis, double tol) {
    const ModeLayout &layout = state.layout();
    size_t n = layout.spatial_count();
    size_t d = layout.internal_dim();
    QuditState out = QuditState::zero(n, d, InternalBasis::Computational);
    Eigen::VectorXcd amps = out.amplitudes();
    double residual_sq = 0;
    std::vector<size_t> labels(n);
    for (const auto &[basis, amp] : state.terms()) {
        bool single = basis.photon_count() == n;
        for (size_t a = 0; a < layout.ancilla_count() && single; a++) {
            single = basis[layout.ancilla_rail(a)] == 0;
        }
        for (size_t j = 0; j < n && single; j++) {
            size_t found = 0;
            for (size_t s = 0; s < d; s++) {
                uint8_t occ = basis[layout.rail_of(j, s)];
                if (occ == 1) {
                    labels[j] = s;
                }
                found += occ;
            }
            single = found == 1;
        }
        if (single) {
            amps[(Eigen::Index)out.index_of(labels)] += amp;
        } else {
            residual_sq += std::norm(amp);
        }
    }

    double total = state.norm();
    double residual = std::sqrt(residual_sq);
    double relative = total > 0 ? residual / total : 0;
    if (relative > tol) {
        throw ResidualError(
            residual, "state has bunched weight: relative residual norm " + std::to_string(relative) +
                          " exceeds tolerance " + std::to_string(tol));
    }

    QuditState comp(n, d, std::move(amps), InternalBasis::Computational);
    if (read_basis == InternalBasis::Fourier) {
        comp = collective_unitary(comp, dft_matrix(d)).with_label_basis(InternalBasis::Fourier);
    }
    return Extraction{std::move(comp), residual, relative};
}

PhaseComparison equal_up_to_phase(const QuditState &a, const QuditState &b, double tol) {
    if (a.qudit_count() != b.qudit_count() || a.dim() != b.dim()) {
        throw std::invalid_argument("qudit state dimensions differ");
    }
    const auto &va = a.amplitudes();
    const auto &vb = b.amplitudes();
    Eigen::Index ref = 0;
    for (Eigen::Index i = 1; i < vb.size(); i++) {
        if (std::abs(vb[i]) > std::abs(vb[ref])) {
            ref = i;
        }
    }
    PhaseComparison result{false, 0, fidelity(a, b)};
    if (std::abs(va[ref]) == 0 || std::abs(vb[ref]) == 0) {
        result.equal = va.norm() == 0 && vb.norm() == 0;
        return result;
    }
    result.phase = std::arg(vb[ref] / va[ref]);
    Complex rot = std::polar(1.0, result.phase);
    double worst = (vb - rot * va).cwiseAbs().maxCoeff();
    result.equal = worst <= tol;
    return result;
}

double fidelity(const QuditState &a, const QuditState &b) {
    if (a.qudit_count() != b.qudit_count() || a.dim() != b.dim()) {
        throw std::invalid_argument("qudit state dimensions differ");
    }
    double na = a.amplitudes().squaredNorm();
    double nb = b.amplitudes().squaredNorm();
    if (na == 0 || nb == 0) {
        return 0;
    }
    return std::norm(a.amplitudes().dot(b.amplitudes())) / (na * nb);
}

QuditState collective_unitary(const QuditState &state, const Eigen::MatrixXcd &unitary) {
    size_t d = state.dim();
    if ((size_t)unitary.rows() != d || (size_t)unitary.cols() != d) {
        throw std::invalid_argument("collective unitary must be d x d");
    }
    if (!is_unitary(unitary)) {
        throw std::invalid_argument("collective unitary is not unitary within 1e-10");
    }
    Eigen::VectorXcd amps = state.amplitudes();
    size_t n = state.qudit_count();
    size_t total = (size_t)amps.size();
    for (size_t q = 0; q < n; q++) {
        size_t stride = ipow(d, n - 1 - q);
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amps.size());
        for (size_t i = 0; i < total; i++) {
            size_t digit = (i / stride) % d;
            size_t base = i - digit * stride;
            for (size_t m = 0; m < d; m++) {
                next[(Eigen::Index)(base + m * stride)] += unitary((Eigen::Index)m, (Eigen::Index)digit) * amps[(Eigen::Index)i];
            }
        }
        amps = std::move(next);
    }
    return QuditState(n, d, std::move(amps), state.label_basis());
}

Eigen::MatrixXcd dft_matrix(size_t dim) {
    Eigen::MatrixXcd f(dim, dim);
    double amp = 1 / std::sqrt((double)dim);
    for (size_t m = 0; m < dim; m++) {
        for (size_t s = 0; s < dim; s++) {
            f((Eigen::Index)m, (Eigen::Index)s) =
                std::polar(amp, 2 * std::numbers::pi * (double)((m * s) % dim) / (double)dim);
        }
    }
    return f;
}

bool is_unitary(const Eigen::MatrixXcd &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace sculpt
