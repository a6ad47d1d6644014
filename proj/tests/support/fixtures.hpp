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

// Small hand-built diagrams shared by several test files.

#ifndef WDALG_TESTS_SUPPORT_FIXTURES_HPP_
#define WDALG_TESTS_SUPPORT_FIXTURES_HPP_

#include "wdalg/diagram.hpp"

namespace wdalg::testing {

// f : x -> y then g : y -> z, boxes 3 and 4.
inline WiringDiagram two_box_chain() {
  WiringDiagram d(make_types({"x"}), make_types({"z"}));
  d.add_box(Box{"f", make_types({"x"}), make_types({"y"})});
  d.add_box(Box{"g", make_types({"y"}), make_types({"z"})});
  d.add_wire({{1, 1}, {3, 1}});
  d.add_wire({{3, 1}, {4, 1}});
  d.add_wire({{4, 1}, {2, 1}});
  return d;
}

// The nested diagram: a 3->2 box feeding two 1->1 boxes.
inline WiringDiagram nest_inner() {
  const auto x = make_types({"x"});
  const auto xxx = make_types({"x", "x", "x"});
  const auto xx = make_types({"x", "x"});
  WiringDiagram d(xxx, xx);
  d.add_box(Box{"red", xxx, xx});
  d.add_box(Box{"orange", x, x});
  d.add_box(Box{"orange", x, x});
  for (int p = 1; p <= 3; ++p) {
    d.add_wire({{1, p}, {3, p}});
  }
  d.add_wire({{3, 1}, {4, 1}});
  d.add_wire({{3, 2}, {5, 1}});
  d.add_wire({{4, 1}, {2, 1}});
  d.add_wire({{5, 1}, {2, 2}});
  return d;
}

// The host: box 1 (3->2, "blue") whose second output feeds box 2 (2->1).
inline WiringDiagram nest_outer() {
  const auto xxx = make_types({"x", "x", "x"});
  const auto xx = make_types({"x", "x"});
  const auto x = make_types({"x"});
  WiringDiagram d(make_types({"x", "x", "x", "x"}), xx);
  d.add_box(Box{"blue", xxx, xx});
  d.add_box(Box{"green", xx, x});
  for (int p = 1; p <= 3; ++p) {
    d.add_wire({{1, p}, {3, p}});
  }
  d.add_wire({{1, 4}, {4, 2}});
  d.add_wire({{3, 1}, {2, 1}});
  d.add_wire({{3, 2}, {4, 1}});
  d.add_wire({{4, 1}, {2, 2}});
  return d;
}

// Two 1->1 boxes wired into a loop; outer box is empty. Built in general
// mode since strict mode refuses the closing wire.
inline WiringDiagram two_box_loop() {
  const auto x = make_types({"x"});
  WiringDiagram d({}, {}, Mode::general);
  d.add_box(Box{"t", x, x});
  d.add_box(Box{"t'", x, x});
  d.add_wire({{3, 1}, {4, 1}});
  d.add_wire({{4, 1}, {3, 1}});
  return d;
}

}  // namespace wdalg::testing

#endif  // WDALG_TESTS_SUPPORT_FIXTURES_HPP_
