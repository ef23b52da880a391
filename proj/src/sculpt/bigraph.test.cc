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
#include <numbers>

#include "gtest/gtest.h"

using namespace sculpt;

namespace {

Edge fe(size_t mode, size_t index, PiPhase phase = PiPhase::zero()) {
    return Edge{mode, phase, ColorLabel{InternalBasis::Fourier, index}};
}

}  // namespace

TEST(bigraph, pi_phase_reduction) {
    ASSERT_EQ(PiPhase(2, 4), PiPhase(1, 2));
    ASSERT_EQ(PiPhase(3, 1), PiPhase(1, 1));
    ASSERT_EQ(PiPhase(-1, 2), PiPhase(3, 2));
    ASSERT_EQ(PiPhase(1, -2), PiPhase(3, 2));
    ASSERT_EQ(PiPhase(4, 2), PiPhase::zero());
    ASSERT_EQ(PiPhase(1, 1).unit(), Complex(-1));
    ASSERT_EQ(PiPhase(1, 2).unit(), Complex(0, 1));
    ASSERT_EQ(PiPhase(3, 2).unit(), Complex(0, -1));
    ASSERT_LT(std::abs(PiPhase(1, 3).unit() - std::polar(1.0, std::numbers::pi / 3)), 1e-15);
    ASSERT_EQ(PiPhase(1, 2) + PiPhase(1, 2), PiPhase::pi());
    ASSERT_EQ(-PiPhase(1, 3), PiPhase(5, 3));
    ASSERT_THROW(PiPhase(1, 0), std::invalid_argument);
}

TEST(bigraph, basis_names) {
    ASSERT_EQ(parse_basis_name("comp"), InternalBasis::Computational);
    ASSERT_EQ(parse_basis_name("computational"), InternalBasis::Computational);
    ASSERT_EQ(parse_basis_name("fourier"), InternalBasis::Fourier);
    ASSERT_THROW(parse_basis_name("tilde"), std::invalid_argument);
}

TEST(bigraph, dot_validation) {
    ASSERT_THROW(Dot({}), std::invalid_argument);
    ASSERT_THROW(Dot({fe(0, 0), fe(0, 1)}), std::invalid_argument);
    Dot d({fe(0, 0), fe(1, 0), fe(2, 0)});
    ASSERT_NEAR(d.edge_amplitude(), 1 / std::sqrt(3.0), 1e-15);
}

TEST(bigraph, graph_validation) {
    ASSERT_THROW(SculptingBigraph(2, 2, {Dot({fe(2, 0)})}), std::invalid_argument);
    ASSERT_THROW(SculptingBigraph(2, 2, {Dot({fe(0, 2)})}), std::invalid_argument);
    SculptingBigraph odd(2, 3, {Dot({fe(0, 0)})});
    ASSERT_FALSE(odd.has_standard_dot_count());
    ASSERT_THROW(odd.require_standard_dot_count(), std::invalid_argument);
}

TEST(bigraph, dot_superposition_expansion) {
    ModeLayout layout(2, 2);
    ModeSuperposition sup = dot_superposition(Dot({fe(0, 0), fe(1, 0)}), layout);
    ASSERT_EQ(sup.terms().size(), 4);
    for (const auto &[rail, c] : sup.terms()) {
        ASSERT_LT(std::abs(c - 0.5), 1e-15) << rail;
    }
    ASSERT_TRUE(sup.is_normalized());

    ModeSuperposition comp = dot_superposition(
        Dot({Edge{0, PiPhase::pi(), ColorLabel{InternalBasis::Computational, 1}}}), layout);
    ASSERT_EQ(comp.terms().size(), 1);
    ASSERT_EQ(comp.terms()[0].first, 1);
    ASSERT_EQ(comp.terms()[0].second, Complex(-1));

    ModeSuperposition phased = dot_superposition(Dot({fe(0, 1), fe(1, 1, PiPhase(1, 2))}), layout);
    ASSERT_TRUE(phased.is_normalized());
}

TEST(bigraph, singlet_structure) {
    SculptingBigraph g2 = singlet_bigraph(2);
    ASSERT_EQ(g2.internal_dim(), 2);
    ASSERT_EQ(g2.dots().size(), 2);
    ASSERT_EQ(g2.dots()[0], Dot({fe(0, 0), fe(1, 0)}));
    ASSERT_EQ(g2.dots()[1], Dot({fe(0, 1), fe(1, 1, PiPhase::pi())}));

    for (size_t n = 2; n <= 5; n++) {
        SculptingBigraph g = singlet_bigraph(n);
        ASSERT_EQ(g.dots().size(), n * (n - 1));
        ASSERT_TRUE(g.has_standard_dot_count());
        ASSERT_EQ(g.edge_count(), 2 * n * (n - 1));
    }
    ASSERT_THROW(singlet_bigraph(1), std::invalid_argument);
}

TEST(bigraph, dicke_structure) {
    SculptingBigraph g2 = dicke_bigraph(2);
    ASSERT_EQ(g2.dots()[0], Dot({fe(0, 0), fe(1, 0, PiPhase::pi())}));
    ASSERT_EQ(g2.dots()[1], Dot({fe(0, 1), fe(1, 1, PiPhase::pi())}));
    ASSERT_EQ(dicke_bigraph(3).dots().size(), 6);
}

TEST(bigraph, dicke_relabel_invariance) {
    // Swapping circles j <-> k and the two edges of each pair dot only flips the
    // edge carrying phase pi, which multiplies the dot by -1. Both dots of a pair
    // flip, so the pair's operator is unchanged.
    for (size_t n = 2; n <= 4; n++) {
        SculptingBigraph g = dicke_bigraph(n);
        for (size_t i = 0; i < g.dots().size(); i += 2) {
            const auto &a = g.dots()[i].edges();
            const auto &b = g.dots()[i + 1].edges();
            ASSERT_EQ(a.size(), 2);
            ASSERT_EQ(b.size(), 2);
            PiPhase flip_a = a[0].phase - a[1].phase;
            PiPhase flip_b = b[0].phase - b[1].phase;
            ASSERT_EQ(flip_a + flip_b, PiPhase::zero());
        }
        SculptingBigraph s = singlet_bigraph(n);
        for (size_t i = 0; i < s.dots().size(); i += 2) {
            const auto &a = s.dots()[i].edges();
            const auto &b = s.dots()[i + 1].edges();
            ASSERT_EQ((a[0].phase - a[1].phase) + (b[0].phase - b[1].phase), PiPhase::pi());
        }
    }
}

TEST(bigraph, symmetric_variant_structure) {
    for (size_t n = 2; n <= 4; n++) {
        SculptingBigraph g = symmetric_variant_bigraph(n);
        ASSERT_EQ(g.dots().size(), n * (n - 1));
        for (const Dot &dot : g.dots()) {
            for (const Edge &e : dot.edges()) {
                ASSERT_TRUE(e.phase.is_zero());
            }
        }
    }
}
