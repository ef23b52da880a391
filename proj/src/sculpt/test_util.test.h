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


#ifndef _SCULPT_TEST_UTIL_TEST_H
#define _SCULPT_TEST_UTIL_TEST_H

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "sculpt/fock.h"

namespace sculpt {

/// Fixed unless SCULPT_TEST_SEED is set.
uint64_t test_seed();

std::mt19937_64 &shared_test_rng();

/// Random state with `photons` photons spread over the layout, `term_count`
/// basis terms with Gaussian complex amplitudes.
SparseState random_state(const ModeLayout &layout, size_t photons, size_t term_count, std::mt19937_64 &rng);

/// Independent Haar-ish unitary for tests (QR of a complex Gaussian).
Eigen::MatrixXcd test_unitary(size_t dim, std::mt19937_64 &rng);

}  // namespace sculpt

#endif
