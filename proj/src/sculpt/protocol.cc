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

#include "sculpt/protocol.h"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sculpt {

SparseState initial_state(size_t spatial_count, size_t internal_dim) {
    ModeLayout layout(spatial_count, internal_dim, 0);
    return basis_state(layout, std::vector<uint8_t>(layout.rail_count(), 1));
}

SparseState apply_sculpting(const SculptingBigraph &graph, const SparseState &state, double tol) {
    const ModeLayout &layout = state.layout();
    if (layout.spatial_count() != graph.spatial_count() || layout.internal_dim() != graph.internal_dim()) {
        throw std::invalid_argument(
            "state layout " + layout.str() + " does not match bigraph N=" + std::to_string(graph.spatial_count()) +
            ", d=" + std::to_string(graph.internal_dim()));
    }
    if (state.is_zero()) {
        throw std::invalid_argument("cannot sculpt the zero state");
    }
    if (state.photon_count() < graph.dots().size()) {
        throw std::invalid_argument(
            "state has " + std::to_string(state.photon_count()) + " photons but the bigraph subtracts " +
            std::to_string(graph.dots().size()));
    }
    SparseState current = state;
    for (const Dot &dot : graph.dots()) {
        current = apply_superposition(current, dot_superposition(dot, layout), false, tol);
        if (current.is_zero()) {
            break;
        }
    }
    return current;
}

std::string Matching::str(const SculptingBigraph &graph) const {
    std::stringstream ss;
    for (size_t i = 0; i < edge_choice.size(); i++) {
        if (i) {
            ss << " ";
        }
        const Edge &e = graph.dots()[i].edges()[edge_choice[i]];
        ss << "dot" << i << "->c" << e.spatial_mode << "(" << e.color.str() << ")";
    }
    return ss.str();
}

std::vector<Matching> enumerate_matchings(const SculptingBigraph &graph) {
    graph.require_standard_dot_count();
    const auto &dots = graph.dots();
    size_t n = graph.spatial_count();
    size_t capacity = graph.internal_dim() - 1;

    // incident_after[i][j]: number of dots with index >= i that touch circle j.
    std::vector<std::vector<size_t>> incident_after(dots.size() + 1, std::vector<size_t>(n, 0));
    for (size_t i = dots.size(); i-- > 0;) {
        incident_after[i] = incident_after[i + 1];
        for (const Edge &e : dots[i].edges()) {
            incident_after[i][e.spatial_mode]++;
        }
    }

    std::vector<Matching> result;
    Matching current{std::vector<size_t>(dots.size(), 0), std::vector<size_t>(n, 0)};
    auto feasible = [&](size_t next_dot) {
        for (size_t j = 0; j < n; j++) {
            if (capacity - current.load[j] > incident_after[next_dot][j]) {
                return false;
            }
        }
        return true;
    };
    auto dfs = [&](auto &&self, size_t i) -> void {
        if (i == dots.size()) {
            result.push_back(current);
            return;
        }
        const auto &edges = dots[i].edges();
        for (size_t e = 0; e < edges.size(); e++) {
            size_t j = edges[e].spatial_mode;
            if (current.load[j] == capacity) {
                continue;
            }
            current.load[j]++;
            current.edge_choice[i] = e;
            if (feasible(i + 1)) {
                self(self, i + 1);
            }
            current.load[j]--;
        }
    };
    if (feasible(0)) {
        dfs(dfs, 0);
    }
    return result;
}

double subtraction_factor(size_t internal_dim, size_t zero_count) {
    if (zero_count >= internal_dim) {
        throw std::out_of_range("zero_count must be below d");
    }
    size_t d = internal_dim;
    size_t l = zero_count;
    double sign = ((d - 1 - l) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::tgamma((double)l + 1) * std::tgamma((double)(d - l)) / std::pow(std::sqrt((double)d), (double)d - 2);
}

SparseState state_from_matchings(const SculptingBigraph &graph, double tol) {
    size_t n = graph.spatial_count();
    size_t d = graph.internal_dim();
    for (size_t i = 0; i < graph.dots().size(); i++) {
        for (const Edge &e : graph.dots()[i].edges()) {
            if (e.color.basis != InternalBasis::Fourier || (e.color.index != 0 && e.color.index != d - 1)) {
                throw std::invalid_argument(
                    "matching evaluation supports only colors 0~ and " + std::to_string(d - 1) + "~; dot " +
                    std::to_string(i) + " has " + e.color.str());
            }
        }
    }

    // Output Fourier label per circle -> summed coefficient.
    std::map<std::vector<size_t>, Complex> by_labels;
    for (const Matching &m : enumerate_matchings(graph)) {
        Complex weight = 1;
        std::vector<size_t> zeros(n, 0);
        for (size_t i = 0; i < m.edge_choice.size(); i++) {
            const Dot &dot = graph.dots()[i];
            const Edge &e = dot.edges()[m.edge_choice[i]];
            weight *= dot.edge_amplitude() * e.phase.unit();
            if (e.color.index == 0) {
                zeros[e.spatial_mode]++;
            }
        }
        std::vector<size_t> labels(n);
        for (size_t j = 0; j < n; j++) {
            weight *= subtraction_factor(d, zeros[j]);
            labels[j] = d - 1 - zeros[j];
        }
        by_labels[labels] += weight;
    }

    // a^dagger_{j,m~}|vac> = (1/sqrt d) sum_s omega^{-m s} |s> on mode j.
    ModeLayout layout(n, d, 0);
    std::vector<SparseState::Term> terms;
    double per_mode = 1 / std::sqrt((double)d);
    for (const auto &[labels, coef] : by_labels) {
        std::vector<size_t> digits(n, 0);
        while (true) {
            Complex amp = coef;
            std::vector<uint8_t> occ(layout.rail_count(), 0);
            for (size_t j = 0; j < n; j++) {
                size_t phase_steps = (d - (labels[j] * digits[j]) % d) % d;
                amp *= std::polar(per_mode, 2 * std::numbers::pi * (double)phase_steps / (double)d);
                occ[layout.rail_of(j, digits[j])] = 1;
            }
            terms.emplace_back(FockBasisState(std::move(occ)), amp);
            size_t pos = n;
            while (pos > 0 && ++digits[pos - 1] == d) {
                digits[--pos] = 0;
            }
            if (pos == 0) {
                break;
            }
        }
    }
    return SparseState::from_terms(layout, std::move(terms), tol);
}

SparseState swap_spatial(const SparseState &state, size_t j, size_t k) {
    const ModeLayout &layout = state.layout();
    if (j >= layout.spatial_count() || k >= layout.spatial_count()) {
        throw std::out_of_range("spatial mode index out of range for " + layout.str());
    }
    if (j == k) {
        throw std::invalid_argument("swap_spatial needs two distinct modes");
    }
    size_t d = layout.internal_dim();
    std::vector<SparseState::Term> out;
    out.reserve(state.size());
    for (const auto &[basis, amp] : state.terms()) {
        std::vector<uint8_t> occ = basis.occupations();
        for (size_t s = 0; s < d; s++) {
            std::swap(occ[j * d + s], occ[k * d + s]);
        }
        out.emplace_back(FockBasisState(std::move(occ)), amp);
    }
    return SparseState::from_terms(layout, std::move(out), 0);
}

}  // namespace sculpt
