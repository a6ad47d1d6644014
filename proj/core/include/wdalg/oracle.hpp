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

// Cross-check of the two composition engines: operadic substitution on
// diagrams against the block formula on spans.

#ifndef WDALG_ORACLE_HPP_
#define WDALG_ORACLE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wdalg/diagram.hpp"
#include "wdalg/operad.hpp"
#include "wdalg/span.hpp"

namespace wdalg {

struct OracleReport {
  // Both results in substitution box order: surviving host boxes, then the
  // substituted boxes.
  WiringDiagramSpan via_substitution;
  WiringDiagramSpan via_formula;
  bool span_iso = false;
  // Multisets of (case, fused wire path) agree between the engines.
  bool cases_agree = false;
  // (case, path) pairs seen by one engine only, prefixed "sub:" or "formula:".
  std::vector<std::string> mismatches;

  [[nodiscard]] bool ok() const noexcept { return span_iso && cases_agree; }
};

// Substitutes sub into inner box i (1-based) of host both ways. Host wires
// are named h1.., sub wires s1..; fused wires carry tuple names. Throws as
// substitute() and compose_formula() do.
OracleReport cross_check(const WiringDiagram& host, int i,
                         const WiringDiagram& sub);

// Position in the formula's box list of each box of the substitution result.
std::vector<std::size_t> substitution_box_order(std::size_t host_boxes,
                                                std::size_t i,
                                                std::size_t sub_boxes);

}  // namespace wdalg

#endif  // WDALG_ORACLE_HPP_
