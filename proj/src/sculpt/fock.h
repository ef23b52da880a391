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

#ifndef _SCULPT_FOCK_H
#define _SCULPT_FOCK_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sculpt {

using Complex = std::complex<double>;

/// Amplitudes below this modulus are dropped from sparse states.
inline constexpr double kPruneTolerance = 1e-12;
/// Default tolerance for comparing amplitudes, fidelities and norms.
inline constexpr double kCompareTolerance = 1e-9;

/// Flat rail indexing for N spatial modes with d internal levels each,
/// followed by ancilla rails.
///
/// Rail (j, s) lives at index j * d + s. Ancilla a lives at N * d + a.
class ModeLayout {
   public:
    struct Address {
        bool is_ancilla;
        size_t spatial;   // valid when !is_ancilla
        size_t internal;  // valid when !is_ancilla
        size_t ancilla;   // valid when is_ancilla
    };

    ModeLayout(size_t spatial_count, size_t internal_dim, size_t ancilla_count = 0);

    size_t spatial_count() const {
        return spatial_count_;
    }
    size_t internal_dim() const {
        return internal_dim_;
    }
    size_t ancilla_count() const {
        return ancilla_count_;
    }
    size_t system_rail_count() const {
        return spatial_count_ * internal_dim_;
    }
    size_t rail_count() const {
        return system_rail_count() + ancilla_count_;
    }

    size_t rail_of(size_t spatial, size_t internal) const;
    size_t ancilla_rail(size_t ancilla) const;
    Address address_of(size_t rail) const;

    /// Same spatial/internal structure with the ancillas removed.
    ModeLayout without_ancillas() const {
        return ModeLayout(spatial_count_, internal_dim_, 0);
    }

    bool operator==(const ModeLayout &other) const = default;
    std::string str() const;

   private:
    size_t spatial_count_;
    size_t internal_dim_;
    size_t ancilla_count_;
};

/// Occupation-number vector, one entry per rail.
class FockBasisState {
   public:
    FockBasisState() = default;
    explicit FockBasisState(std::vector<uint8_t> occupations);
    static FockBasisState zeros(size_t rail_count);

    const std::vector<uint8_t> &occupations() const {
        return occupations_;
    }
    uint8_t operator[](size_t rail) const {
        return occupations_[rail];
    }
    size_t size() const {
        return occupations_.size();
    }
    uint32_t photon_count() const {
        return photon_count_;
    }

    /// Copy with one rail's occupation shifted by delta (must stay >= 0).
    FockBasisState with_delta(size_t rail, int delta) const;

    bool operator==(const FockBasisState &other) const {
        return occupations_ == other.occupations_;
    }
    auto operator<=>(const FockBasisState &other) const {
        return occupations_ <=> other.occupations_;
    }
    std::string str() const;

   private:
    std::vector<uint8_t> occupations_;
    uint32_t photon_count_ = 0;
};

struct FockBasisStateHash {
    size_t operator()(const FockBasisState &state) const;
};

/// Immutable sparse superposition of Fock basis states.
///
/// Terms are kept sorted lexicographically by occupation vector, and no
/// stored amplitude has modulus below the tolerance the state was built with.
/// The empty term list is the zero state.
class SparseState {
   public:
    using Term = std::pair<FockBasisState, Complex>;

    explicit SparseState(ModeLayout layout) : layout_(layout) {
    }

    /// Merges duplicate basis states, drops amplitudes below `tol` and sorts.
    static SparseState from_terms(ModeLayout layout, std::vector<Term> terms, double tol = kPruneTolerance);

    const ModeLayout &layout() const {
        return layout_;
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }

    Complex amplitude(const FockBasisState &basis) const;
    double norm_squared() const;
    double norm() const;

    /// True when every term carries the same photon count (vacuously for zero).
    bool is_photon_homogeneous() const;
    /// Photon count of the first term; 0 for the zero state.
    uint32_t photon_count() const;

    std::string str() const;

   private:
    ModeLayout layout_;
    std::vector<Term> terms_;
};

/// Linear combination of rails, sum_r c_r a_r.
class ModeSuperposition {
   public:
    using Term = std::pair<size_t, Complex>;

    explicit ModeSuperposition(std::vector<Term> terms);

    const std::vector<Term> &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    double norm() const;
    bool is_normalized(double tol = kCompareTolerance) const;
    ModeSuperposition scaled(Complex factor) const;

   private:
    std::vector<Term> terms_;
};

SparseState vacuum(const ModeLayout &layout);
SparseState basis_state(const ModeLayout &layout, std::vector<uint8_t> occupations);

SparseState create(const SparseState &state, size_t rail);
SparseState annihilate(const SparseState &state, size_t rail);

/// Applies sum_r c_r a_r, or its adjoint sum_r conj(c_r) a_r^dagger.
SparseState apply_superposition(
    const SparseState &state, const ModeSuperposition &sup, bool adjoint = false, double tol = kPruneTolerance);

/// Fourier-basis annihilation operator of level `fourier_index` on a spatial mode:
/// (1/sqrt d) sum_s omega^{l s} a_{j,s}, omega = exp(2 pi i / d).
ModeSuperposition tilde_superposition(const ModeLayout &layout, size_t spatial, size_t fourier_index);

/// sum conj(a_i) b_i over shared basis states.
Complex inner(const SparseState &a, const SparseState &b);

SparseState prune(const SparseState &state, double tol);
SparseState scale(const SparseState &state, Complex factor);
/// alpha * a + beta * b.
SparseState add(const SparseState &a, const SparseState &b, Complex alpha = 1, Complex beta = 1);
/// Returns the unit-norm state and the original norm. Throws on the zero state.
std::pair<SparseState, double> normalize(const SparseState &state);

/// Largest amplitude difference over the union of supports.
double max_abs_difference(const SparseState &a, const SparseState &b);

/// Passive linear-optical transformation on a subset of rails.
///
/// `unitary(m, r)` is the single-photon amplitude for rail rails[r] to end up
/// on rails[m], i.e. a_r^dagger -> sum_m unitary(m, r) a_m^dagger.
SparseState apply_mode_unitary(
    const SparseState &state, std::span<const size_t> rails, const Eigen::MatrixXcd &unitary, double tol = kPruneTolerance);

/// Keeps only terms accepted by the predicate (no renormalization).
SparseState filter(const SparseState &state, const std::function<bool(const FockBasisState &)> &keep);

}  // namespace sculpt

#endif
