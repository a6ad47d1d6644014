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

// Operadic composition of wiring diagrams by substitution.
//
// substitute() copies the host, adds every box of every substituted diagram,
// extends each substituted wire into the host (passing, incoming, outgoing or
// internal, fusing it with every host wire on the shared boundary port), and
// finally deletes the substituted boxes, which drops the host wires that ran
// into them. Resulting box order: surviving host boxes in their original
// order, then the boxes of each substituted diagram in target-id order.

#ifndef WDALG_OPERAD_HPP_
#define WDALG_OPERAD_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "wdalg/diagram.hpp"

namespace wdalg {

// The operad identity on a box: a single copy of the box wired straight
// through to the outer ports. The copy keeps the box label, so substituting
// inert(b) for a box labelled like b leaves the host unchanged.
WiringDiagram inert(const TypeList& inputs, const TypeList& outputs,
                    Mode mode = Mode::strict);
WiringDiagram inert(const Box& box, Mode mode = Mode::strict);

enum class FuseCase { untouched, passing, incoming, outgoing, internal };

std::string_view to_string(FuseCase c) noexcept;

// Identifies one wire of one input: diagram 0 is the host, diagram k >= 1 is
// the k-th substituted diagram in target-id order.
struct WireOrigin {
  int diagram = 0;
  std::size_t wire = 0;

  friend bool operator==(const WireOrigin&, const WireOrigin&) = default;
  friend auto operator<=>(const WireOrigin&, const WireOrigin&) = default;
};

struct WireProvenance {
  FuseCase kind = FuseCase::untouched;
  // Input wires fused into this one, in flow order.
  std::vector<WireOrigin> path;
};

struct TracedSubstitution {
  WiringDiagram diagram;
  // Parallel to diagram.wires().
  std::vector<WireProvenance> provenance;
};

// Simultaneous substitution into non-overlapping inner boxes. Throws
// DanglingRef for unknown targets and SignatureMismatch when a diagram's
// outer ports differ from the box it replaces.
WiringDiagram substitute(const WiringDiagram& d,
                         const std::map<int, WiringDiagram>& targets);
TracedSubstitution substitute_traced(
    const WiringDiagram& d, const std::map<int, WiringDiagram>& targets);

// Full composition: one diagram per inner box, in box order.
WiringDiagram ocompose(const WiringDiagram& f,
                       std::span<const WiringDiagram> gs);

// Partial composition into the i-th inner box (1-based, vertex i + 2).
WiringDiagram ocompose_at(const WiringDiagram& f, int i,
                          const WiringDiagram& g);

}  // namespace wdalg

#endif  // WDALG_OPERAD_HPP_
