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

// Equality of wiring diagrams up to renumbering of inner boxes.
//
// Two diagrams are equal when some bijection of their inner boxes preserves
// box labels and port types and carries the wire multiset of one onto the
// other, port indices included. Outer ports are never permuted.
//
// is_equal() refines a joint box coloring and then backtracks over
// color-compatible matchings. canonicalize() computes a canonical labeling by
// individualization and refinement, taking the lexicographically least wire
// list over the search tree. The two procedures share only the refinement
// step, so each can be used to check the other.

#ifndef WDALG_EQUALITY_HPP_
#define WDALG_EQUALITY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wdalg/diagram.hpp"

namespace wdalg {

// Box id in a -> box id in b.
using BoxBijection = std::map<int, int>;

// Throws ModeMismatch if the diagrams are in different modes.
bool is_equal(const WiringDiagram& a, const WiringDiagram& b);
std::optional<BoxBijection> find_isomorphism(const WiringDiagram& a,
                                             const WiringDiagram& b);

struct CanonicalForm {
  WiringDiagram diagram;
  // relabeling[old id] = canonical id; entries 1 and 2 are fixed.
  std::vector<int> relabeling;
};

CanonicalForm canonicalize(const WiringDiagram& d);

// FNV-1a over the canonical form. Equal diagrams hash equally; equal hashes
// say nothing on their own.
std::uint64_t invariant_hash(const WiringDiagram& d);

// Renumbers inner boxes: box id k moves to position perm[k - 3] + 3.
WiringDiagram relabel_boxes(const WiringDiagram& d,
                            const std::vector<int>& perm);

}  // namespace wdalg

#endif  // WDALG_EQUALITY_HPP_
