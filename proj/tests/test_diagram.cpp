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

#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "wdalg/diagram.hpp"
#include "wdalg/equality.hpp"

using namespace wdalg;
using wdalg::testing::two_box_chain;
using wdalg::testing::two_box_loop;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("fresh diagrams have only the outer vertices") {
  WiringDiagram d(make_types({"x"}), make_types({"z"}));
  CHECK(d.input_id() == 1);
  CHECK(d.output_id() == 2);
  CHECK(d.box_count() == 0);
  CHECK(d.vertex_count() == 2);
  CHECK(d.wires().empty());

  WiringDiagram empty({}, {});
  CHECK(validate(empty, Mode::strict).ok());

  WiringDiagram pass(make_types({"x", "y"}), make_types({"x", "y"}));
  CHECK(pass.box_count() == 0);
  CHECK_FALSE(validate(pass, Mode::strict).ok());
  pass.add_wire({{1, 1}, {2, 1}});
  pass.add_wire({{1, 2}, {2, 2}});
  CHECK(validate(pass, Mode::strict).ok());
}

TEST_CASE("empty type names are rejected") {
  CHECK(kind_of([] { PortType(""); }) == ErrorKind::TypeError);
}

TEST_CASE("add_box hands out consecutive ids") {
  WiringDiagram d(make_types({"x"}), make_types({"z"}));
  CHECK(d.add_box(Box{"f", make_types({"x"}), make_types({"y"})}) == 3);
  CHECK(d.add_box(Box{"g", make_types({"y"}), make_types({"z"})}) == 4);
  const int z = d.add_box(Box{"nullary", {}, {}});
  CHECK(z == 5);
  CHECK(d.neighbors(z, Direction::in).empty());
  CHECK(d.neighbors(z, Direction::out).empty());
}

TEST_CASE("add_wire maintains the digraph and checks its input") {
  WiringDiagram d = two_box_chain();
  CHECK(d.digraph().has_edge(1, 3));
  CHECK(d.digraph().has_edge(3, 4));
  CHECK(d.digraph().has_edge(4, 2));
  CHECK(d.neighbors(1, Direction::out) == std::set<int>{3});
  CHECK(d.neighbors(2, Direction::in) == std::set<int>{4});
  CHECK(validate(d, Mode::strict).ok());

  SUBCASE("self loop") {
    WiringDiagram e(make_types({"x"}), make_types({"x"}));
    e.add_box(Box{"f", make_types({"x"}), make_types({"x"})});
    CHECK(kind_of([&] { e.add_wire({{3, 1}, {3, 1}}); }) ==
          ErrorKind::CycleCreated);
  }
  SUBCASE("type mismatch") {
    WiringDiagram e(make_types({"x"}), make_types({"z"}));
    e.add_box(Box{"f", make_types({"x"}), make_types({"y"})});
    e.add_box(Box{"g", make_types({"z"}), make_types({"z"})});
    CHECK(kind_of([&] { e.add_wire({{3, 1}, {4, 1}}); }) ==
          ErrorKind::TypeMismatch);
  }
  SUBCASE("dangling") {
    CHECK(kind_of([&] { d.add_wire({{7, 1}, {2, 1}}); }) ==
          ErrorKind::DanglingRef);
    CHECK(kind_of([&] { d.add_wire({{3, 2}, {2, 1}}); }) ==
          ErrorKind::DanglingRef);
    CHECK(kind_of([&] { d.add_wire({{2, 1}, {3, 1}}); }) ==
          ErrorKind::DanglingRef);
  }
  SUBCASE("occupied in strict mode only") {
    CHECK(kind_of([&] { d.add_wire({{1, 1}, {3, 1}}); }) ==
          ErrorKind::PortOccupied);
    d.set_mode(Mode::general);
    d.add_wire({{1, 1}, {3, 1}});
    CHECK(d.wires().size() == 4);
    CHECK(validate(d, Mode::general).ok());
    CHECK(validate(d, Mode::strict).has(ViolationKind::PortOccupancy));
  }
  SUBCASE("longer cycles are caught eagerly") {
    WiringDiagram e({}, {});
    const auto x = make_types({"x"});
    const auto xx = make_types({"x", "x"});
    e.add_box(Box{"a", xx, xx});
    e.add_box(Box{"b", x, x});
    e.add_wire({{3, 1}, {4, 1}});
    CHECK(kind_of([&] { e.add_wire({{4, 1}, {3, 1}}); }) ==
          ErrorKind::CycleCreated);
  }
}

TEST_CASE("remove_wire keeps parallel edges") {
  WiringDiagram d(make_types({"x", "x"}), {}, Mode::general);
  const auto xx = make_types({"x", "x"});
  d.add_box(Box{"f", xx, {}});
  d.add_wire({{1, 1}, {3, 1}});
  d.add_wire({{1, 2}, {3, 2}});
  d.remove_wire({{1, 1}, {3, 1}});
  CHECK(d.digraph().has_edge(1, 3));
  d.remove_wire({{1, 2}, {3, 2}});
  CHECK_FALSE(d.digraph().has_edge(1, 3));
  CHECK(kind_of([&] { d.remove_wire({{1, 2}, {3, 2}}); }) ==
        ErrorKind::DanglingRef);
}

TEST_CASE("remove_boxes renumbers in order") {
  WiringDiagram d = two_box_chain();
  WiringDiagram r = d;
  const auto map = r.remove_boxes({3});
  CHECK(r.box_count() == 1);
  CHECK(r.box(3).value == "g");
  CHECK(map[3] == 0);
  CHECK(map[4] == 3);
  CHECK(r.wires() == std::vector<Wire>{{{3, 1}, {2, 1}}});
  CHECK(r.digraph().edges() == std::set<std::pair<int, int>>{{3, 2}});

  WiringDiagram same = d;
  same.remove_boxes({});
  CHECK(same == d);

  CHECK(kind_of([&] { d.remove_boxes({1}); }) == ErrorKind::DanglingRef);
  CHECK(kind_of([&] { d.remove_boxes({9}); }) == ErrorKind::DanglingRef);
  CHECK(kind_of([&] { (void)d.neighbors(9, Direction::in); }) ==
        ErrorKind::DanglingRef);
}

TEST_CASE("removing a box matches the diagram built without it") {
  // Three boxes in a row; dropping the middle one leaves the ends
  // unconnected, which is the same as never adding it.
  const auto x = make_types({"x"});
  WiringDiagram d(x, x, Mode::general);
  d.add_box(Box{"a", x, x});
  d.add_box(Box{"b", x, x});
  d.add_box(Box{"c", x, x});
  d.add_wire({{1, 1}, {3, 1}});
  d.add_wire({{3, 1}, {4, 1}});
  d.add_wire({{4, 1}, {5, 1}});
  d.add_wire({{5, 1}, {2, 1}});
  d.remove_boxes({4});

  WiringDiagram expect(x, x, Mode::general);
  expect.add_box(Box{"a", x, x});
  expect.add_box(Box{"c", x, x});
  expect.add_wire({{1, 1}, {3, 1}});
  expect.add_wire({{4, 1}, {2, 1}});
  CHECK(is_equal(d, expect));
}

TEST_CASE("validate reports the two-box loop") {
  const auto d = two_box_loop();
  const auto report = validate(d, Mode::general);
  CHECK_FALSE(report.ok());
  CHECK(report.has(ViolationKind::Cycle));
  CHECK(report.cycle == std::vector<int>{3, 4});
}

TEST_CASE("unwired ports: invalid strict, fine general") {
  WiringDiagram d(make_types({"x"}), make_types({"y"}), Mode::general);
  d.add_box(Box{"f", make_types({"x"}), make_types({"y"})});
  d.add_wire({{1, 1}, {3, 1}});
  CHECK(validate(d, Mode::general).ok());
  const auto strict = validate(d, Mode::strict);
  CHECK(strict.has(ViolationKind::PortOccupancy));
  CHECK_FALSE(strict.has(ViolationKind::Cycle));
}

TEST_CASE("validate flags bad wires stored unchecked") {
  WiringDiagram d(make_types({"x"}), make_types({"z"}));
  d.add_box(Box{"f", make_types({"x"}), make_types({"y"})});
  d.add_wire_unchecked({{1, 1}, {3, 1}});
  d.add_wire_unchecked({{3, 1}, {2, 1}});
  d.add_wire_unchecked({{3, 5}, {2, 1}});
  const auto report = validate(d, Mode::strict);
  CHECK(report.has(ViolationKind::TypeMismatch));
  CHECK(report.has(ViolationKind::DanglingRef));
  CHECK(report.has(ViolationKind::PortOccupancy));
}

TEST_CASE("digraph equals the projection of the wires") {
  WiringDiagram d = two_box_chain();
  d.set_mode(Mode::general);
  d.add_wire({{1, 1}, {3, 1}});
  d.remove_wire({{3, 1}, {4, 1}});
  d.add_wire({{3, 1}, {4, 1}});
  d.remove_wire({{1, 1}, {3, 1}});
  std::set<std::pair<int, int>> projected;
  for (const auto& w : d.wires()) {
    projected.insert({w.source.box, w.target.box});
  }
  CHECK(d.digraph().edges() == projected);
  CHECK_FALSE(validate(d, Mode::general).has(ViolationKind::DigraphDesync));
}
