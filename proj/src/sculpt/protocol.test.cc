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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gtest/gtest.h"
#include "sculpt/targets.h"
#include "sculpt/test_util.test.h"

using namespace sculpt;

namespace {

Edge fe(size_t mode, size_t index, PiPhase phase = PiPhase::zero()) {
    return Edge{mode, phase, ColorLabel{InternalBasis::Fourier, index}};
}

/// Walks every one-edge-per-dot assignment and keeps those loading each circle d-1 times.
size_t brute_force_matching_count(const SculptingBigraph &graph) {
    size_t count = 0;
    std::vector<size_t> choice(graph.dots().size(), 0);
    while (true) {
        std::vector<size_t> load(graph.spatial_count(), 0);
        for (size_t i = 0; i < choice.size(); i++) {
            load[graph.dots()[i].edges()[choice[i]].spatial_mode]++;
        }
        count += std::all_of(load.begin(), load.end(), [&](size_t x) { return x == graph.internal_dim() - 1; });
        size_t i = 0;
        while (i < choice.size() && ++choice[i] == graph.dots()[i].edges().size()) {
            choice[i++] = 0;
        }
        if (i == choice.size()) {
            return count;
        }
    }
}

SculptingBigraph random_graph(size_t n, size_t d, std::mt19937_64 &rng) {
    std::uniform_int_distribution<size_t> mode(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> quarter(0, 7);
    std::vector<Dot> dots;
    for (size_t i = 0; i < (d - 1) * n; i++) {
        std::vector<Edge> edges;
        size_t a = mode(rng);
        edges.push_back(fe(a, coin(rng) ? d - 1 : 0, PiPhase(quarter(rng), 4)));
        if (coin(rng)) {
            size_t b = (a + 1 + mode(rng) % (n - 1)) % n;
            edges.push_back(fe(b, coin(rng) ? d - 1 : 0, PiPhase(quarter(rng), 4)));
        }
        dots.emplace_back(std::move(edges));
    }
    return SculptingBigraph(n, d, std::move(dots));
}

SparseState sculpted(const SculptingBigraph &g) {
    return apply_sculpting(g, initial_state(g.spatial_count(), g.internal_dim()));
}

}  // namespace

TEST(protocol, initial_state) {
    SparseState s = initial_state(1, 2);
    ASSERT_EQ(s.size(), 1);
    ASSERT_EQ(s.terms()[0].first, FockBasisState({1, 1}));
    SparseState s3 = initial_state(3, 3);
    ASSERT_EQ(s3.terms()[0].first, FockBasisState(std::vector<uint8_t>(9, 1)));
    ASSERT_EQ(s3.photon_count(), 9);
    ASSERT_EQ(s3.norm(), 1);
}

TEST(protocol, singlet_two_by_hand) {
    // (1/2)(|0~1~> - |1~0~>) rewritten on computational rails is (|1,0> - |0,1>)/2,
    // i.e. +1/2 on (mode0 level1, mode1 level0) and -1/2 on (mode0 level0, mode1 level1).
    SparseState s = sculpted(singlet_bigraph(2));
    ASSERT_EQ(s.size(), 2);
    ASSERT_LT(std::abs(s.amplitude(FockBasisState({0, 1, 1, 0})) - 0.5), 1e-15);
    ASSERT_LT(std::abs(s.amplitude(FockBasisState({1, 0, 0, 1})) + 0.5), 1e-15);
}

TEST(protocol, empty_dots_identity) {
    SculptingBigraph g(2, 2, {});
    SparseState in = initial_state(2, 2);
    ASSERT_EQ(max_abs_difference(apply_sculpting(g, in), in), 0);
}

TEST(protocol, apply_sculpting_errors) {
    SculptingBigraph g = singlet_bigraph(2);
    ASSERT_THROW(apply_sculpting(g, SparseState(g.layout())), std::invalid_argument);
    ASSERT_THROW(apply_sculpting(g, initial_state(3, 3)), std::invalid_argument);
    ASSERT_THROW(apply_sculpting(g, vacuum(g.layout())), std::invalid_argument);
}

TEST(protocol, photon_count_after_schemes) {
    for (size_t n = 2; n <= 4; n++) {
        for (const SculptingBigraph &g : {singlet_bigraph(n), dicke_bigraph(n), symmetric_variant_bigraph(n)}) {
            SparseState s = sculpted(g);
            ASSERT_TRUE(s.is_photon_homogeneous());
            ASSERT_EQ(s.photon_count(), n);
        }
    }
}

TEST(protocol, matching_counts_match_brute_force) {
    for (size_t n = 2; n <= 4; n++) {
        for (const SculptingBigraph &g : {singlet_bigraph(n), dicke_bigraph(n), symmetric_variant_bigraph(n)}) {
            auto ms = enumerate_matchings(g);
            ASSERT_EQ(ms.size(), brute_force_matching_count(g)) << n;
            for (const Matching &m : ms) {
                for (size_t load : m.load) {
                    ASSERT_EQ(load, g.internal_dim() - 1);
                }
            }
        }
    }
    ASSERT_EQ(enumerate_matchings(singlet_bigraph(2)).size(), 2);

    auto &rng = shared_test_rng();
    for (size_t trial = 0; trial < 40; trial++) {
        SculptingBigraph g = random_graph(2 + trial % 2, 2 + (trial / 2) % 2, rng);
        ASSERT_EQ(enumerate_matchings(g).size(), brute_force_matching_count(g));
    }
}

TEST(protocol, isolated_circle_has_no_matchings) {
    SculptingBigraph g(2, 2, {Dot({fe(0, 0)}), Dot({fe(0, 1)})});
    ASSERT_TRUE(enumerate_matchings(g).empty());
    ASSERT_TRUE(state_from_matchings(g).is_zero());
    ASSERT_TRUE(sculpted(g).is_zero());
}

TEST(protocol, matchings_deterministic) {
    ASSERT_EQ(enumerate_matchings(singlet_bigraph(3)), enumerate_matchings(singlet_bigraph(3)));
}

TEST(protocol, subtraction_factor_values) {
    ASSERT_NEAR(subtraction_factor(2, 1), 1, 1e-15);
    ASSERT_NEAR(subtraction_factor(2, 0), -1, 1e-15);
    ASSERT_NEAR(subtraction_factor(3, 0), 2 / std::sqrt(3.0), 1e-15);
    ASSERT_NEAR(subtraction_factor(3, 1), -1 / std::sqrt(3.0), 1e-15);
    ASSERT_THROW(subtraction_factor(3, 3), std::out_of_range);
}

TEST(protocol, oracle_matches_sculpting) {
    for (size_t n = 2; n <= 4; n++) {
        for (const SculptingBigraph &g : {singlet_bigraph(n), dicke_bigraph(n), symmetric_variant_bigraph(n)}) {
            ASSERT_LT(max_abs_difference(state_from_matchings(g), sculpted(g)), 1e-9) << n;
        }
    }
}

TEST(protocol, oracle_is_one_photon_per_mode_sector) {
    // A circle hit by k subtractions keeps d - k photons, so the matchings are
    // exactly the one-photon-per-mode sector. Other sectors need not cancel.
    auto &rng = shared_test_rng();
    for (size_t trial = 0; trial < 30; trial++) {
        SculptingBigraph g = random_graph(2 + trial % 2, 2 + (trial / 2) % 2, rng);
        ModeLayout layout = g.layout();
        SparseState sector = filter(sculpted(g), [&](const FockBasisState &b) {
            for (size_t j = 0; j < layout.spatial_count(); j++) {
                size_t occ = 0;
                for (size_t s = 0; s < layout.internal_dim(); s++) {
                    occ += b[layout.rail_of(j, s)];
                }
                if (occ != 1) {
                    return false;
                }
            }
            return true;
        });
        ASSERT_LT(max_abs_difference(state_from_matchings(g), sector), 1e-12) << trial;
    }
}

TEST(protocol, oracle_rejects_middle_colors) {
    SculptingBigraph g(1, 3, {Dot({fe(0, 1)}), Dot({fe(0, 0)})});
    ASSERT_THROW(state_from_matchings(g), std::invalid_argument);
}

TEST(protocol, dot_order_independence) {
    auto &rng = shared_test_rng();
    for (size_t n = 2; n <= 3; n++) {
        for (const SculptingBigraph &g : {singlet_bigraph(n), dicke_bigraph(n)}) {
            SparseState base = sculpted(g);
            std::vector<Dot> dots = g.dots();
            for (size_t trial = 0; trial < 5; trial++) {
                std::shuffle(dots.begin(), dots.end(), rng);
                SculptingBigraph shuffled(n, n, dots);
                ASSERT_LT(max_abs_difference(sculpted(shuffled), base), 1e-12);
            }
        }
    }
}

TEST(protocol, swap_spatial) {
    auto &rng = shared_test_rng();
    ModeLayout layout(3, 2);
    SparseState x = random_state(layout, 3, 5, rng);
    ASSERT_EQ(max_abs_difference(swap_spatial(swap_spatial(x, 0, 2), 0, 2), x), 0);
    SparseState init = initial_state(3, 3);
    ASSERT_EQ(max_abs_difference(swap_spatial(init, 1, 2), init), 0);
    ASSERT_THROW(swap_spatial(x, 1, 1), std::invalid_argument);
    ASSERT_THROW(swap_spatial(x, 0, 3), std::out_of_range);
}

TEST(protocol, sign_invariants) {
    for (size_t n = 2; n <= 4; n++) {
        SparseState singlet = normalize(sculpted(singlet_bigraph(n))).first;
        SparseState dicke = normalize(sculpted(dicke_bigraph(n))).first;
        SparseState sym = normalize(sculpted(symmetric_variant_bigraph(n))).first;
        for (size_t j = 0; j < n; j++) {
            for (size_t k = j + 1; k < n; k++) {
                ASSERT_LT(std::abs(inner(singlet, swap_spatial(singlet, j, k)) + 1.0), 1e-9);
                ASSERT_LT(std::abs(inner(dicke, swap_spatial(dicke, j, k)) - 1.0), 1e-9);
                ASSERT_LT(std::abs(inner(sym, swap_spatial(sym, j, k)) - 1.0), 1e-9);
            }
        }
    }
}

TEST(protocol, support_one_photon_per_mode) {
    for (size_t n = 2; n <= 4; n++) {
        for (const SculptingBigraph &g : {singlet_bigraph(n), dicke_bigraph(n)}) {
            SparseState s = sculpted(g);
            double bunched = 0;
            for (const auto &[basis, amp] : s.terms()) {
                for (size_t j = 0; j < n; j++) {
                    size_t occ = 0;
                    for (size_t q = 0; q < n; q++) {
                        occ += basis[g.layout().rail_of(j, q)];
                    }
                    if (occ != 1) {
                        bunched += std::norm(amp);
                        break;
                    }
                }
            }
            ASSERT_LT(std::sqrt(bunched) / s.norm(), 1e-9);
        }
    }
}

TEST(protocol, sculpting_weights) {
    ASSERT_NEAR(sculpted(singlet_bigraph(2)).norm_squared(), 0.5, 1e-14);
    ASSERT_NEAR(sculpted(singlet_bigraph(3)).norm_squared(), 1.0 / 18, 1e-14);
    ASSERT_NEAR(sculpted(dicke_bigraph(3)).norm_squared(), 1.0 / 18, 1e-14);
    ASSERT_NEAR(sculpted(symmetric_variant_bigraph(3)).norm_squared(), 7.0 / 108, 1e-14);
}

TEST(protocol, symmetric_variant_two_reads_as_dicke) {
    SparseState s = normalize(sculpted(symmetric_variant_bigraph(2))).first;
    Extraction e = extract_qudits(s, InternalBasis::Fourier);
    ASSERT_TRUE(equal_up_to_phase(dicke_1n_state(2), e.state).equal);
}
