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

#include "sculpt/bigraph.h"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sculpt {

PiPhase::PiPhase(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("phase denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    int64_t period = 2 * den;
    num %= period;
    if (num < 0) {
        num += period;
    }
    num_ = num;
    den_ = den;
}

double PiPhase::radians() const {
    return std::numbers::pi * (double)num_ / (double)den_;
}

Complex PiPhase::unit() const {
    // Exact values at multiples of pi/2.
    if (num_ == 0) {
        return 1;
    }
    if (den_ == 1) {
        return -1;
    }
    if (den_ == 2) {
        return num_ == 1 ? Complex(0, 1) : Complex(0, -1);
    }
    return std::polar(1.0, radians());
}

PiPhase PiPhase::operator+(const PiPhase &other) const {
    return PiPhase(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

PiPhase PiPhase::operator-() const {
    return PiPhase(-num_, den_);
}

std::string PiPhase::str() const {
    if (num_ == 0) {
        return "0";
    }
    std::string s = (num_ == 1 ? "" : std::to_string(num_)) + "pi";
    if (den_ != 1) {
        s += "/" + std::to_string(den_);
    }
    return s;
}

const char *basis_name(InternalBasis basis) {
    return basis == InternalBasis::Computational ? "computational" : "fourier";
}

InternalBasis parse_basis_name(const std::string &name) {
    if (name == "computational" || name == "comp") {
        return InternalBasis::Computational;
    }
    if (name == "fourier") {
        return InternalBasis::Fourier;
    }
    throw std::invalid_argument("unknown basis '" + name + "'");
}

std::string ColorLabel::str() const {
    return std::to_string(index) + (basis == InternalBasis::Fourier ? "~" : "");
}

Dot::Dot(std::vector<Edge> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) {
        throw std::invalid_argument("a dot needs at least one edge");
    }
    std::unordered_set<size_t> modes;
    for (const Edge &e : edges_) {
        if (!modes.insert(e.spatial_mode).second) {
            throw std::invalid_argument(
                "dot has two edges on spatial mode " + std::to_string(e.spatial_mode));
        }
    }
}

double Dot::edge_amplitude() const {
    return 1 / std::sqrt((double)edges_.size());
}

SculptingBigraph::SculptingBigraph(size_t spatial_count, size_t internal_dim, std::vector<Dot> dots)
    : spatial_count_(spatial_count), internal_dim_(internal_dim), dots_(std::move(dots)) {
    if (spatial_count < 1) {
        throw std::invalid_argument("bigraph needs at least one circle");
    }
    if (internal_dim < 2) {
        throw std::invalid_argument("bigraph needs internal dimension >= 2");
    }
    for (size_t i = 0; i < dots_.size(); i++) {
        for (const Edge &e : dots_[i].edges()) {
            if (e.spatial_mode >= spatial_count) {
                throw std::invalid_argument(
                    "dot " + std::to_string(i) + " references spatial mode " + std::to_string(e.spatial_mode) +
                    " but N=" + std::to_string(spatial_count));
            }
            if (e.color.index >= internal_dim) {
                throw std::invalid_argument(
                    "dot " + std::to_string(i) + " has color index " + std::to_string(e.color.index) +
                    " but d=" + std::to_string(internal_dim));
            }
        }
    }
}

void SculptingBigraph::require_standard_dot_count() const {
    if (!has_standard_dot_count()) {
        throw std::invalid_argument(
            "protocol needs (d-1)N = " + std::to_string((internal_dim_ - 1) * spatial_count_) + " dots, graph has " +
            std::to_string(dots_.size()));
    }
}

size_t SculptingBigraph::edge_count() const {
    size_t total = 0;
    for (const Dot &dot : dots_) {
        total += dot.edges().size();
    }
    return total;
}

ModeSuperposition dot_superposition(const Dot &dot, const ModeLayout &layout) {
    std::map<size_t, Complex> coefs;
    double amp = dot.edge_amplitude();
    for (const Edge &e : dot.edges()) {
        if (e.color.index >= layout.internal_dim()) {
            throw std::invalid_argument("edge color " + e.color.str() + " exceeds d=" + std::to_string(layout.internal_dim()));
        }
        Complex weight = amp * e.phase.unit();
        if (e.color.basis == InternalBasis::Computational) {
            coefs[layout.rail_of(e.spatial_mode, e.color.index)] += weight;
        } else {
            ModeSuperposition tilde = tilde_superposition(layout, e.spatial_mode, e.color.index);
            for (const auto &[rail, c] : tilde.terms()) {
                coefs[rail] += weight * c;
            }
        }
    }
    std::vector<ModeSuperposition::Term> terms(coefs.begin(), coefs.end());
    return ModeSuperposition(std::move(terms));
}

namespace {

SculptingBigraph pairwise_scheme(size_t n, PiPhase first_sign, PiPhase second_sign, const char *name) {
    if (n < 2) {
        throw std::invalid_argument(std::string(name) + " scheme needs N >= 2");
    }
    ColorLabel red{InternalBasis::Fourier, 0};
    ColorLabel blue{InternalBasis::Fourier, n - 1};
    std::vector<Dot> dots;
    for (size_t j = 0; j < n; j++) {
        for (size_t k = j + 1; k < n; k++) {
            dots.emplace_back(std::vector<Edge>{{j, PiPhase::zero(), red}, {k, first_sign, red}});
            dots.emplace_back(std::vector<Edge>{{j, PiPhase::zero(), blue}, {k, second_sign, blue}});
        }
    }
    return SculptingBigraph(n, n, std::move(dots));
}

}  // namespace

SculptingBigraph singlet_bigraph(size_t n) {
    return pairwise_scheme(n, PiPhase::zero(), PiPhase::pi(), "singlet");
}

SculptingBigraph dicke_bigraph(size_t n) {
    return pairwise_scheme(n, PiPhase::pi(), PiPhase::pi(), "dicke");
}

SculptingBigraph symmetric_variant_bigraph(size_t n) {
    return pairwise_scheme(n, PiPhase::zero(), PiPhase::zero(), "symmetric variant");
}

}  // namespace sculpt
