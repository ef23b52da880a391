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

#ifndef _SCULPT_PROTOCOL_H
#define _SCULPT_PROTOCOL_H

#include <string>
#include <vector>

#include "sculpt/bigraph.h"
#include "sculpt/fock.h"

namespace sculpt {

/// One boson in every rail (j, s): d bosons per spatial mode, one per internal level.
SparseState initial_state(size_t spatial_count, size_t internal_dim);

/// Applies every dot's subtraction in listed order.
SparseState apply_sculpting(const SculptingBigraph &graph, const SparseState &state, double tol = kPruneTolerance);

/// An assignment of each dot to one of its own edges such that every circle
/// is picked exactly d-1 times.
struct Matching {
    /// edge_choice[i] is the index into dots()[i].edges().
    std::vector<size_t> edge_choice;
    /// load[j] is the number of dots assigned to circle j (always d-1).
    std::vector<size_t> load;

    bool operator==(const Matching &other) const = default;
    std::string str(const SculptingBigraph &graph) const;
};

/// All (d-1)-to-one matchings, in lexicographic order of edge choices.
/// Requires the standard (d-1) N dot count.
std::vector<Matching> enumerate_matchings(const SculptingBigraph &graph);

/// Sum over matchings of edge weights times the closed-form per-circle
/// subtraction factor. Only Fourier colors 0~ and (d-1)~ are supported.
///
/// Always equals the one-photon-per-mode sector of
/// apply_sculpting(graph, initial_state(N, d)). For bigraphs whose other
/// subtraction patterns cancel (all the built-in schemes) it is the whole state.
SparseState state_from_matchings(const SculptingBigraph &graph, double tol = kPruneTolerance);

/// Closed-form coefficient of a^dagger_{(d-1-l)~}|vac> when l subtractions of 0~
/// and d-1-l subtractions of (d-1)~ hit one circle holding one boson per level.
double subtraction_factor(size_t internal_dim, size_t zero_count);

/// Exchanges the occupation blocks of spatial modes j and k.
SparseState swap_spatial(const SparseState &state, size_t j, size_t k);

}  // namespace sculpt

#endif
