# Copyright 2026 The qudit-sculpt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Sculpting-bigraph simulator for heralded N-partite qudit entanglement."""

import json as _json

from . import _core
from ._core import (
    Bigraph,
    Circuit,
    FormatError,
    ResidualError,
    SparseState,
    apply_sculpting,
    closed_form_success_expression,
    closed_form_success_probability,
    compile_bigraph,
    d33_reference,
    dicke_bigraph,
    dicke_state,
    direct_projection_probability,
    enumerate_matchings,
    equal_up_to_phase,
    extract_qudits,
    fidelity_sweep,
    ideal_heralded_run,
    initial_state,
    inner,
    max_abs_difference,
    normalize,
    singlet_bigraph,
    singlet_state,
    state_from_matchings,
    swap_spatial,
    symmetric_variant_bigraph,
)


def simulate(circuit, all_outcomes=False):
    """Herald reports as dicts; the first is the postselected herald pattern."""
    return _json.loads(_core.simulate(circuit, all_outcomes))


def verify(graph, target, basis="both", tol=1e-9, seed=1):
    """Verification report as a dict."""
    return _json.loads(_core.verify(graph, target, basis, tol, seed))
