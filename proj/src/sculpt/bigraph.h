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

#ifndef _SCULPT_BIGRAPH_H
#define _SCULPT_BIGRAPH_H

#include <cstdint>
#include <string>
#include <vector>

#include "sculpt/fock.h"

namespace sculpt {

/// Phase exp(i pi num / den), kept gcd-reduced with den > 0 and num in [0, 2 den).
class PiPhase {
   public:
    PiPhase() = default;
    PiPhase(int64_t num, int64_t den);

    static PiPhase zero() {
        return PiPhase(0, 1);
    }
    static PiPhase pi() {
        return PiPhase(1, 1);
    }

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    double radians() const;
    Complex unit() const;

    PiPhase operator+(const PiPhase &other) const;
    PiPhase operator-() const;
    PiPhase operator-(const PiPhase &other) const {
        return *this + (-other);
    }
    bool operator==(const PiPhase &other) const = default;
    std::string str() const;

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

enum class InternalBasis { Computational, Fourier };

const char *basis_name(InternalBasis basis);
InternalBasis parse_basis_name(const std::string &name);

/// Internal-state label carried by an edge: computational level s, or Fourier level l (tilde).
struct ColorLabel {
    InternalBasis basis = InternalBasis::Fourier;
    size_t index = 0;

    bool operator==(const ColorLabel &other) const = default;
    std::string str() const;
};

struct Edge {
    size_t spatial_mode = 0;
    PiPhase phase;
    ColorLabel color;

    bool operator==(const Edge &other) const = default;
};

/// A superposed single-boson subtraction. Every edge carries amplitude 1/sqrt(edge count).
class Dot {
   public:
    explicit Dot(std::vector<Edge> edges);

    const std::vector<Edge> &edges() const {
        return edges_;
    }
    double edge_amplitude() const;
    bool operator==(const Dot &other) const = default;

   private:
    std::vector<Edge> edges_;
};

/// N labelled circles (spatial modes), unlabelled dots (subtractions), and their edges.
class SculptingBigraph {
   public:
    SculptingBigraph(size_t spatial_count, size_t internal_dim, std::vector<Dot> dots);

    size_t spatial_count() const {
        return spatial_count_;
    }
    size_t internal_dim() const {
        return internal_dim_;
    }
    const std::vector<Dot> &dots() const {
        return dots_;
    }
    ModeLayout layout() const {
        return ModeLayout(spatial_count_, internal_dim_, 0);
    }

    /// The standard protocol subtracts (d-1) bosons per mode, so it needs (d-1) N dots.
    bool has_standard_dot_count() const {
        return dots_.size() == (internal_dim_ - 1) * spatial_count_;
    }
    void require_standard_dot_count() const;

    size_t edge_count() const;
    bool operator==(const SculptingBigraph &other) const = default;

   private:
    size_t spatial_count_;
    size_t internal_dim_;
    std::vector<Dot> dots_;
};

/// Expands a dot into the annihilation superposition it applies, with Fourier
/// colors written out over the computational rails of their mode.
ModeSuperposition dot_superposition(const Dot &dot, const ModeLayout &layout);

/// Pairwise scheme for the totally antisymmetric N-qudit state (d = N).
/// Each pair j < k gets dots (a_{j,0~} + a_{k,0~}) and (a_{j,(N-1)~} - a_{k,(N-1)~}).
SculptingBigraph singlet_bigraph(size_t n);
/// Same pairs as the singlet scheme with a minus sign in both factors.
SculptingBigraph dicke_bigraph(size_t n);
/// Same pairs with a plus sign in both factors.
SculptingBigraph symmetric_variant_bigraph(size_t n);

}  // namespace sculpt

#endif
