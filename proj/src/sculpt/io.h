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

#ifndef _SCULPT_IO_H
#define _SCULPT_IO_H

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sculpt/bigraph.h"
#include "sculpt/circuit.h"
#include "sculpt/fock.h"
#include "sculpt/targets.h"

namespace sculpt {

/// Malformed or schema-violating input file.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Canonical text: sorted keys, two-space indent, doubles as %.17g, trailing newline.
/// Parsing the output and dumping again reproduces it byte for byte.
std::string canonical_dump(const nlohmann::json &value);

nlohmann::json bigraph_to_json(const SculptingBigraph &graph);
SculptingBigraph bigraph_from_json(const nlohmann::json &value);

nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &value);

nlohmann::json sparse_state_to_json(const SparseState &state);
SparseState sparse_state_from_json(const nlohmann::json &value);

nlohmann::json qudit_state_to_json(const QuditState &state);
QuditState qudit_state_from_json(const nlohmann::json &value);

nlohmann::json herald_report_to_json(const HeraldReport &report);

/// Graphviz rendering: circles c0..c{N-1}, point-shaped dots, edges colored
/// by label (0~ red, (d-1)~ blue) and annotated with nonzero phases.
std::string bigraph_to_dot(const SculptingBigraph &graph);

/// Throws FormatError when the file is missing or not valid JSON.
nlohmann::json read_json_file(const std::string &path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace sculpt

#endif
