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

// Combinatorial wiring diagrams: an outer box, numbered inner boxes with
// ordered typed ports, and wires between ports. Every diagram keeps an
// underlying simple directed graph on vertices 1..n+2 in sync with its wires;
// vertex 1 carries the outer inputs and vertex 2 the outer outputs.

#ifndef WDALG_DIAGRAM_HPP_
#define WDALG_DIAGRAM_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wdalg/error.hpp"

namespace wdalg {

// An element of the type universe. Names are non-empty; equality is by name.
class PortType {
 public:
  explicit PortType(std::string name);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  friend bool operator==(const PortType&, const PortType&) = default;
  friend auto operator<=>(const PortType&, const PortType&) = default;

 private:
  std::string name_;
};

using TypeList = std::vector<PortType>;

TypeList make_types(std::initializer_list<std::string_view> names);
std::string to_string(const TypeList& types);

struct Box {
  std::string value;
  TypeList inputs;
  TypeList outputs;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline constexpr int kInputId = 1;
inline constexpr int kOutputId = 2;
inline constexpr int kFirstBoxId = 3;

// A (vertex, 1-based port) pair. Source refs index output ports of inner
// boxes or the outer inputs (vertex 1); target refs index input ports of
// inner boxes or the outer outputs (vertex 2).
struct PortRef {
  int box = 0;
  int port = 0;

  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct Wire {
  PortRef source;
  PortRef target;

  friend bool operator==(const Wire&, const Wire&) = default;
  friend auto operator<=>(const Wire&, const Wire&) = default;
};

// strict: every port carries exactly one wire and the box graph is acyclic
// at all times. general: any number of wires per port, acyclicity checked
// only by validate().
enum class Mode { strict, general };

enum class Direction { in, out };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(Direction dir) noexcept;

// Simple directed graph with edge multiplicities tracked internally so that
// removing one of several parallel wires keeps the edge.
class SimpleDigraph {
 public:
  SimpleDigraph() = default;
  explicit SimpleDigraph(std::size_t vertex_count);

  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return out_.size();
  }
  int add_vertex();
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] std::set<int> out_neighbors(int v) const;
  [[nodiscard]] std::set<int> in_neighbors(int v) const;
  [[nodiscard]] std::set<std::pair<int, int>> edges() const;

  // Deletes the marked vertices (1-based) and compacts the rest in order.
  void remove_vertices(const std::vector<int>& new_id);

 private:
  // Indexed by vertex - 1; maps neighbor -> multiplicity.
  std::vector<std::map<int, int>> out_;
  std::vector<std::map<int, int>> in_;
};

class WiringDiagram {
 public:
  WiringDiagram(TypeList inputs, TypeList outputs, Mode mode = Mode::strict);

  [[nodiscard]] const TypeList& input_types() const noexcept {
    return inputs_;
  }
  [[nodiscard]] const TypeList& output_types() const noexcept {
    return outputs_;
  }
  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  void set_mode(Mode mode) noexcept { mode_ = mode; }

  [[nodiscard]] static constexpr int input_id() noexcept { return kInputId; }
  [[nodiscard]] static constexpr int output_id() noexcept {
    return kOutputId;
  }

  [[nodiscard]] std::size_t box_count() const noexcept {
    return boxes_.size();
  }
  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return boxes_.size() + 2;
  }
  [[nodiscard]] std::vector<int> box_ids() const;
  [[nodiscard]] bool has_box(int id) const noexcept;
  [[nodiscard]] const Box& box(int id) const;
  [[nodiscard]] const std::vector<Box>& boxes() const noexcept {
    return boxes_;
  }
  [[nodiscard]] const std::vector<Wire>& wires() const noexcept {
    return wires_;
  }
  [[nodiscard]] const SimpleDigraph& digraph() const noexcept {
    return graph_;
  }

  // Type of the port a wire may leave from / arrive at, or nullopt if the
  // reference does not resolve.
  [[nodiscard]] std::optional<PortType> source_type(PortRef ref) const;
  [[nodiscard]] std::optional<PortType> target_type(PortRef ref) const;

  [[nodiscard]] std::vector<Wire> in_wires(PortRef target) const;
  [[nodiscard]] std::vector<Wire> out_wires(PortRef source) const;

  int add_box(Box box);

  // Throws TypeMismatch, DanglingRef, and in strict mode PortOccupied or
  // CycleCreated.
  void add_wire(const Wire& wire);
  void add_wires(std::span<const Wire> wires);

  // Stores the wire without any checking. Used by readers that must be able
  // to represent invalid input so that validate() can report on it.
  void add_wire_unchecked(const Wire& wire);

  // Removes one occurrence; DanglingRef if the wire is not present.
  void remove_wire(const Wire& wire);

  // Deletes the named inner boxes and every incident wire, then renumbers
  // the survivors consecutively in their original order. Returns the map
  // old id -> new id (index by old id; 0 marks a deleted vertex).
  std::vector<int> remove_boxes(const std::set<int>& ids);

  [[nodiscard]] std::set<int> neighbors(int v, Direction dir) const;

  friend bool operator==(const WiringDiagram& a, const WiringDiagram& b) {
    return a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ &&
           a.boxes_ == b.boxes_ && a.wires_ == b.wires_;
  }

 private:
  void check_vertex(int v) const;
  [[nodiscard]] bool box_reaches(int from, int to) const;

  TypeList inputs_;
  TypeList outputs_;
  Mode mode_;
  std::vector<Box> boxes_;
  std::vector<Wire> wires_;
  SimpleDigraph graph_;
};

enum class ViolationKind {
  TypeMismatch,
  DanglingRef,
  DigraphDesync,
  Cycle,
  PortOccupancy,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  Mode mode = Mode::strict;
  std::vector<Violation> violations;
  // Shortest directed cycle among inner boxes, if any (vertex ids).
  std::vector<int> cycle;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] bool has(ViolationKind kind) const noexcept;
};

ValidationReport validate(const WiringDiagram& d, Mode mode);

}  // namespace wdalg

#endif  // WDALG_DIAGRAM_HPP_
