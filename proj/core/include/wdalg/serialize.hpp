// Copyright 2026 The wdalg Authors
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

// JSON and DOT encodings of wiring diagrams.
//
// JSON layout (compact, keys in this order):
//   {"inputs":[..],"outputs":[..],
//    "boxes":[{"id":3,"value":"f","inputs":[..],"outputs":[..]},..],
//    "wires":[{"src":[box,port],"tgt":[box,port]},..]}
// Vertices 1 and 2 are implicit and never listed as boxes.

#ifndef WDALG_SERIALIZE_HPP_
#define WDALG_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include "wdalg/diagram.hpp"

namespace wdalg {

std::string to_json(const WiringDiagram& d);

// Parses and validates in the given mode; throws InvalidDiagram carrying the
// first violation, or SyntaxError for malformed JSON.
WiringDiagram from_json(std::string_view text, Mode mode = Mode::strict);

// Parses without validating, so that invalid diagrams can be inspected.
WiringDiagram from_json_unchecked(std::string_view text,
                                  Mode mode = Mode::strict);

// to_json of the canonical form.
std::string canonical_json(const WiringDiagram& d);

std::string report_to_json(const ValidationReport& report);

// Graphviz digraph of the canonical form: record nodes with one field per
// port, edges labeled by wire type.
std::string export_dot(const WiringDiagram& d);

}  // namespace wdalg

#endif  // WDALG_SERIALIZE_HPP_
