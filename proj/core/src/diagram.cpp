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

#include "wdalg/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cycles.hpp"

namespace wdalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::PortOccupied: return "PortOccupied";
    case ErrorKind::DanglingRef: return "DanglingRef";
    case ErrorKind::CycleCreated: return "CycleCreated";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::DuplicateWire: return "DuplicateWire";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::ProgressViolation: return "ProgressViolation";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

PortType::PortType(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw Error(ErrorKind::TypeError, "port type name must be non-empty");
  }
}

TypeList make_types(std::initializer_list<std::string_view> names) {
  TypeList out;
  out.reserve(names.size());
  for (auto n : names) {
    out.emplace_back(std::string(n));
  }
  return out;
}

std::string to_string(const TypeList& types) {
  std::string out = "[";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += types[i].name();
  }
  return out + "]";
}

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::strict ? "strict" : "general";
}

std::string_view to_string(Direction dir) noexcept {
  return dir == Direction::in ? "in" : "out";
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::TypeMismatch: return "TypeMismatch";
    case ViolationKind::DanglingRef: return "DanglingRef";
    case ViolationKind::DigraphDesync: return "DigraphDesync";
    case ViolationKind::Cycle: return "Cycle";
    case ViolationKind::PortOccupancy: return "PortOccupancy";
  }
  return "Unknown";
}

// SimpleDigraph ----------------------------------------------------------

SimpleDigraph::SimpleDigraph(std::size_t vertex_count)
    : out_(vertex_count), in_(vertex_count) {}

int SimpleDigraph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<int>(out_.size());
}

void SimpleDigraph::add_edge(int u, int v) {
  ++out_.at(u - 1)[v];
  ++in_.at(v - 1)[u];
}

void SimpleDigraph::remove_edge(int u, int v) {
  auto& fwd = out_.at(u - 1);
  auto it = fwd.find(v);
  if (it == fwd.end()) {
    return;
  }
  if (--it->second == 0) {
    fwd.erase(it);
  }
  auto& back = in_.at(v - 1);
  auto jt = back.find(u);
  if (--jt->second == 0) {
    back.erase(jt);
  }
}

bool SimpleDigraph::has_edge(int u, int v) const {
  if (u < 1 || static_cast<std::size_t>(u) > out_.size()) {
    return false;
  }
  return out_[u - 1].contains(v);
}

std::set<int> SimpleDigraph::out_neighbors(int v) const {
  std::set<int> out;
  for (const auto& [w, count] : out_.at(v - 1)) {
    out.insert(w);
  }
  return out;
}

std::set<int> SimpleDigraph::in_neighbors(int v) const {
  std::set<int> out;
  for (const auto& [w, count] : in_.at(v - 1)) {
    out.insert(w);
  }
  return out;
}

std::set<std::pair<int, int>> SimpleDigraph::edges() const {
  std::set<std::pair<int, int>> out;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (const auto& [v, count] : out_[u]) {
      out.emplace(static_cast<int>(u) + 1, v);
    }
  }
  return out;
}

void SimpleDigraph::remove_vertices(const std::vector<int>& new_id) {
  auto remap = [&](const std::vector<std::map<int, int>>& adj) {
    std::vector<std::map<int, int>> result;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (new_id[u + 1] == 0) {
        continue;
      }
      std::map<int, int> row;
      for (const auto& [v, count] : adj[u]) {
        if (new_id[v] != 0) {
          row[new_id[v]] = count;
        }
      }
      result.push_back(std::move(row));
    }
    return result;
  };
  out_ = remap(out_);
  in_ = remap(in_);
}

// WiringDiagram ----------------------------------------------------------

WiringDiagram::WiringDiagram(TypeList inputs, TypeList outputs, Mode mode)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      mode_(mode),
      graph_(2) {}

std::vector<int> WiringDiagram::box_ids() const {
  std::vector<int> ids(boxes_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = static_cast<int>(i) + kFirstBoxId;
  }
  return ids;
}

bool WiringDiagram::has_box(int id) const noexcept {
  return id >= kFirstBoxId &&
         static_cast<std::size_t>(id - kFirstBoxId) < boxes_.size();
}

const Box& WiringDiagram::box(int id) const {
  if (!has_box(id)) {
    throw Error(ErrorKind::DanglingRef,
                "no inner box with id " + std::to_string(id));
  }
  return boxes_[id - kFirstBoxId];
}

std::optional<PortType> WiringDiagram::source_type(PortRef ref) const {
  if (ref.port < 1) {
    return std::nullopt;
  }
  const auto p = static_cast<std::size_t>(ref.port - 1);
  if (ref.box == kInputId) {
    return p < inputs_.size() ? std::optional(inputs_[p]) : std::nullopt;
  }
  if (has_box(ref.box)) {
    const auto& outs = boxes_[ref.box - kFirstBoxId].outputs;
    return p < outs.size() ? std::optional(outs[p]) : std::nullopt;
  }
  return std::nullopt;
}

std::optional<PortType> WiringDiagram::target_type(PortRef ref) const {
  if (ref.port < 1) {
    return std::nullopt;
  }
  const auto p = static_cast<std::size_t>(ref.port - 1);
  if (ref.box == kOutputId) {
    return p < outputs_.size() ? std::optional(outputs_[p]) : std::nullopt;
  }
  if (has_box(ref.box)) {
    const auto& ins = boxes_[ref.box - kFirstBoxId].inputs;
    return p < ins.size() ? std::optional(ins[p]) : std::nullopt;
  }
  return std::nullopt;
}

std::vector<Wire> WiringDiagram::in_wires(PortRef target) const {
  std::vector<Wire> out;
  for (const auto& w : wires_) {
    if (w.target == target) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Wire> WiringDiagram::out_wires(PortRef source) const {
  std::vector<Wire> out;
  for (const auto& w : wires_) {
    if (w.source == source) {
      out.push_back(w);
    }
  }
  return out;
}

int WiringDiagram::add_box(Box box) {
  boxes_.push_back(std::move(box));
  return graph_.add_vertex();
}

namespace {

std::string describe(PortRef ref) {
  return "(" + std::to_string(ref.box) + "," + std::to_string(ref.port) + ")";
}

std::string describe(const Wire& w) {
  return describe(w.source) + "=>" + describe(w.target);
}

}  // namespace

bool WiringDiagram::box_reaches(int from, int to) const {
  if (from == to) {
    return true;
  }
  std::vector<bool> seen(vertex_count() + 1, false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : graph_.out_neighbors(v)) {
      if (w == to) {
        return true;
      }
      if (has_box(w) && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

void WiringDiagram::add_wire(const Wire& wire) {
  const auto src = source_type(wire.source);
  if (!src) {
    throw Error(ErrorKind::DanglingRef,
                "source " + describe(wire.source) + " does not resolve");
  }
  const auto tgt = target_type(wire.target);
  if (!tgt) {
    throw Error(ErrorKind::DanglingRef,
                "target " + describe(wire.target) + " does not resolve");
  }
  if (*src != *tgt) {
    throw Error(ErrorKind::TypeMismatch,
                describe(wire) + " connects " + src->name() + " to " +
                    tgt->name());
  }
  if (mode_ == Mode::strict) {
    for (const auto& w : wires_) {
      if (w.source == wire.source) {
        throw Error(ErrorKind::PortOccupied,
                    "source " + describe(wire.source) + " already wired");
      }
      if (w.target == wire.target) {
        throw Error(ErrorKind::PortOccupied,
                    "target " + describe(wire.target) + " already wired");
      }
    }
    if (has_box(wire.source.box) && has_box(wire.target.box) &&
        box_reaches(wire.target.box, wire.source.box)) {
      throw Error(ErrorKind::CycleCreated,
                  describe(wire) + " closes a cycle among inner boxes");
    }
  }
  add_wire_unchecked(wire);
}

void WiringDiagram::add_wires(std::span<const Wire> wires) {
  for (const auto& w : wires) {
    add_wire(w);
  }
}

void WiringDiagram::add_wire_unchecked(const Wire& wire) {
  wires_.push_back(wire);
  const auto n = static_cast<int>(vertex_count());
  const int u = wire.source.box;
  const int v = wire.target.box;
  if (u >= 1 && u <= n && v >= 1 && v <= n) {
    graph_.add_edge(u, v);
  }
}

void WiringDiagram::remove_wire(const Wire& wire) {
  auto it = std::find(wires_.begin(), wires_.end(), wire);
  if (it == wires_.end()) {
    throw Error(ErrorKind::DanglingRef, "no wire " + describe(wire));
  }
  wires_.erase(it);
  const auto n = static_cast<int>(vertex_count());
  if (wire.source.box >= 1 && wire.source.box <= n && wire.target.box >= 1 &&
      wire.target.box <= n) {
    graph_.remove_edge(wire.source.box, wire.target.box);
  }
}

std::vector<int> WiringDiagram::remove_boxes(const std::set<int>& ids) {
  for (int id : ids) {
    if (!has_box(id)) {
      throw Error(ErrorKind::DanglingRef,
                  "cannot remove vertex " + std::to_string(id));
    }
  }
  const auto n = static_cast<int>(vertex_count());
  std::vector<int> new_id(n + 1, 0);
  int next = 1;
  for (int v = 1; v <= n; ++v) {
    if (!ids.contains(v)) {
      new_id[v] = next++;
    }
  }
  auto renumber = [&](PortRef& ref) {
    if (ref.box >= 1 && ref.box <= n) {
      ref.box = new_id[ref.box];
    }
  };
  std::vector<Wire> kept;
  kept.reserve(wires_.size());
  for (auto w : wires_) {
    if (ids.contains(w.source.box) || ids.contains(w.target.box)) {
      continue;
    }
    renumber(w.source);
    renumber(w.target);
    kept.push_back(w);
  }
  wires_ = std::move(kept);
  std::vector<Box> boxes;
  boxes.reserve(boxes_.size() - ids.size());
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (!ids.contains(static_cast<int>(i) + kFirstBoxId)) {
      boxes.push_back(std::move(boxes_[i]));
    }
  }
  boxes_ = std::move(boxes);
  graph_.remove_vertices(new_id);
  return new_id;
}

void WiringDiagram::check_vertex(int v) const {
  if (v < 1 || static_cast<std::size_t>(v) > vertex_count()) {
    throw Error(ErrorKind::DanglingRef, "no vertex " + std::to_string(v));
  }
}

std::set<int> WiringDiagram::neighbors(int v, Direction dir) const {
  check_vertex(v);
  return dir == Direction::out ? graph_.out_neighbors(v)
                               : graph_.in_neighbors(v);
}

// validate ---------------------------------------------------------------

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const WiringDiagram& d, Mode mode) {
  ValidationReport report;
  report.mode = mode;
  auto fail = [&](ViolationKind kind, std::string msg) {
    report.violations.push_back({kind, std::move(msg)});
  };

  const auto n = static_cast<int>(d.vertex_count());
  std::set<std::pair<int, int>> expected_edges;
  std::map<PortRef, int> source_use;
  std::map<PortRef, int> target_use;
  for (const auto& w : d.wires()) {
    const auto src = d.source_type(w.source);
    const auto tgt = d.target_type(w.target);
    if (!src) {
      fail(ViolationKind::DanglingRef,
           "wire " + describe(w) + ": source does not resolve");
    }
    if (!tgt) {
      fail(ViolationKind::DanglingRef,
           "wire " + describe(w) + ": target does not resolve");
    }
    if (src && tgt && *src != *tgt) {
      fail(ViolationKind::TypeMismatch, "wire " + describe(w) + " connects " +
                                            src->name() + " to " +
                                            tgt->name());
    }
    if (w.source.box >= 1 && w.source.box <= n && w.target.box >= 1 &&
        w.target.box <= n) {
      expected_edges.emplace(w.source.box, w.target.box);
    }
    ++source_use[w.source];
    ++target_use[w.target];
  }

  if (expected_edges != d.digraph().edges()) {
    fail(ViolationKind::DigraphDesync,
         "underlying digraph does not match the wire set");
  }

  // Progress condition: box-to-box edges must form a DAG.
  std::vector<std::vector<int>> adj(d.box_count());
  for (const auto& [u, v] : expected_edges) {
    if (d.has_box(u) && d.has_box(v)) {
      adj[u - kFirstBoxId].push_back(v - kFirstBoxId);
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
  }
  if (auto cycle = detail::shortest_cycle(adj); !cycle.empty()) {
    std::ostringstream msg;
    msg << "inner boxes form a cycle:";
    for (int& v : cycle) {
      v += kFirstBoxId;
      msg << ' ' << v;
    }
    report.cycle = std::move(cycle);
    fail(ViolationKind::Cycle, msg.str());
  }

  if (mode == Mode::strict) {
    auto check_port = [&](const std::map<PortRef, int>& use, PortRef ref,
                          std::string_view role) {
      const auto it = use.find(ref);
      const int count = it == use.end() ? 0 : it->second;
      if (count != 1) {
        fail(ViolationKind::PortOccupancy,
             std::string(role) + " port " + describe(ref) + " has " +
                 std::to_string(count) + " wires");
      }
    };
    for (std::size_t i = 0; i < d.input_types().size(); ++i) {
      check_port(source_use, {kInputId, static_cast<int>(i) + 1}, "source");
    }
    for (std::size_t i = 0; i < d.output_types().size(); ++i) {
      check_port(target_use, {kOutputId, static_cast<int>(i) + 1}, "target");
    }
    for (int id : d.box_ids()) {
      const auto& b = d.box(id);
      for (std::size_t i = 0; i < b.outputs.size(); ++i) {
        check_port(source_use, {id, static_cast<int>(i) + 1}, "source");
      }
      for (std::size_t i = 0; i < b.inputs.size(); ++i) {
        check_port(target_use, {id, static_cast<int>(i) + 1}, "target");
      }
    }
  }
  return report;
}

}  // namespace wdalg
