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

#include "wdalg/operad.hpp"

#include <set>
#include <string>
#include <utility>

namespace wdalg {

std::string_view to_string(FuseCase c) noexcept {
  switch (c) {
    case FuseCase::untouched: return "untouched";
    case FuseCase::passing: return "passing";
    case FuseCase::incoming: return "incoming";
    case FuseCase::outgoing: return "outgoing";
    case FuseCase::internal: return "internal";
  }
  return "unknown";
}

WiringDiagram inert(const Box& box, Mode mode) {
  WiringDiagram d(box.inputs, box.outputs, mode);
  const int v = d.add_box(box);
  for (std::size_t i = 0; i < box.inputs.size(); ++i) {
    const int p = static_cast<int>(i) + 1;
    d.add_wire({{kInputId, p}, {v, p}});
  }
  for (std::size_t i = 0; i < box.outputs.size(); ++i) {
    const int p = static_cast<int>(i) + 1;
    d.add_wire({{v, p}, {kOutputId, p}});
  }
  return d;
}

WiringDiagram inert(const TypeList& inputs, const TypeList& outputs,
                    Mode mode) {
  return inert(Box{"", inputs, outputs}, mode);
}

namespace {

bool is_outer_source(PortRef ref) { return ref.box == kInputId; }
bool is_outer_target(PortRef ref) { return ref.box == kOutputId; }

std::vector<WireOrigin> join(std::vector<WireOrigin> a,
                             const std::vector<WireOrigin>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Working state: the diagram under construction plus the provenance of each
// of its wires, kept index-aligned.
struct Workspace {
  WiringDiagram d;
  std::vector<WireProvenance> prov;

  void add(const Wire& w, FuseCase kind, std::vector<WireOrigin> path) {
    d.add_wire_unchecked(w);
    prov.push_back({kind, std::move(path)});
  }

  std::vector<std::size_t> wires_into(PortRef target) const {
    std::vector<std::size_t> out;
    const auto& ws = d.wires();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (ws[i].target == target) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> wires_from(PortRef source) const {
    std::vector<std::size_t> out;
    const auto& ws = d.wires();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (ws[i].source == source) {
        out.push_back(i);
      }
    }
    return out;
  }
};

// Extends every wire of `sub` (which replaces vertex v) into the workspace.
// Sub box b lives at vertex offset + b in the workspace.
void substitute_wires(Workspace& ws, int v, const WiringDiagram& sub,
                      int sub_index, int offset) {
  auto lift = [&](PortRef ref) { return PortRef{ref.box + offset, ref.port}; };
  const auto& sub_wires = sub.wires();
  for (std::size_t k = 0; k < sub_wires.size(); ++k) {
    const Wire& w = sub_wires[k];
    const WireOrigin self{sub_index, k};
    const bool from_outer = is_outer_source(w.source);
    const bool to_outer = is_outer_target(w.target);
    if (from_outer && to_outer) {
      const auto ins = ws.wires_into({v, w.source.port});
      const auto outs = ws.wires_from({v, w.target.port});
      for (std::size_t i : ins) {
        for (std::size_t o : outs) {
          const Wire fused{ws.d.wires()[i].source, ws.d.wires()[o].target};
          auto path = ws.prov[i].path;
          path.push_back(self);
          path = join(std::move(path), ws.prov[o].path);
          ws.add(fused, FuseCase::passing, std::move(path));
        }
      }
    } else if (from_outer) {
      for (std::size_t i : ws.wires_into({v, w.source.port})) {
        const Wire fused{ws.d.wires()[i].source, lift(w.target)};
        auto path = ws.prov[i].path;
        path.push_back(self);
        ws.add(fused, FuseCase::incoming, std::move(path));
      }
    } else if (to_outer) {
      for (std::size_t o : ws.wires_from({v, w.target.port})) {
        const Wire fused{lift(w.source), ws.d.wires()[o].target};
        ws.add(fused, FuseCase::outgoing, join({self}, ws.prov[o].path));
      }
    } else {
      ws.add({lift(w.source), lift(w.target)}, FuseCase::internal, {self});
    }
  }
}

}  // namespace

TracedSubstitution substitute_traced(
    const WiringDiagram& d, const std::map<int, WiringDiagram>& targets) {
  Mode mode = d.mode();
  for (const auto& [v, sub] : targets) {
    const Box& box = d.box(v);
    if (sub.input_types() != box.inputs ||
        sub.output_types() != box.outputs) {
      throw Error(ErrorKind::SignatureMismatch,
                  "diagram " + to_string(sub.input_types()) + " -> " +
                      to_string(sub.output_types()) +
                      " cannot replace box " + std::to_string(v) + " " +
                      to_string(box.inputs) + " -> " +
                      to_string(box.outputs));
    }
    if (sub.mode() == Mode::general) {
      mode = Mode::general;
    }
  }

  Workspace ws{d, {}};
  ws.d.set_mode(Mode::general);
  ws.prov.reserve(d.wires().size());
  for (std::size_t k = 0; k < d.wires().size(); ++k) {
    ws.prov.push_back({FuseCase::untouched, {{0, k}}});
  }

  std::vector<int> offsets;
  for (const auto& [v, sub] : targets) {
    const int first = static_cast<int>(ws.d.vertex_count()) + 1;
    offsets.push_back(first - kFirstBoxId);
    for (const Box& b : sub.boxes()) {
      ws.d.add_box(b);
    }
  }

  int sub_index = 1;
  for (const auto& [v, sub] : targets) {
    substitute_wires(ws, v, sub, sub_index, offsets[sub_index - 1]);
    ++sub_index;
  }

  std::set<int> removed;
  for (const auto& [v, sub] : targets) {
    removed.insert(v);
  }
  std::vector<WireProvenance> kept;
  kept.reserve(ws.prov.size());
  const auto& wires = ws.d.wires();
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (!removed.contains(wires[i].source.box) &&
        !removed.contains(wires[i].target.box)) {
      kept.push_back(std::move(ws.prov[i]));
    }
  }
  ws.d.remove_boxes(removed);
  ws.d.set_mode(mode);
  return {std::move(ws.d), std::move(kept)};
}

WiringDiagram substitute(const WiringDiagram& d,
                         const std::map<int, WiringDiagram>& targets) {
  return substitute_traced(d, targets).diagram;
}

WiringDiagram ocompose(const WiringDiagram& f,
                       std::span<const WiringDiagram> gs) {
  if (gs.size() != f.box_count()) {
    throw Error(ErrorKind::SignatureMismatch,
                "expected " + std::to_string(f.box_count()) +
                    " diagrams, got " + std::to_string(gs.size()));
  }
  std::map<int, WiringDiagram> targets;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    targets.emplace(static_cast<int>(i) + kFirstBoxId, gs[i]);
  }
  return substitute(f, targets);
}

WiringDiagram ocompose_at(const WiringDiagram& f, int i,
                          const WiringDiagram& g) {
  const int v = i + kFirstBoxId - 1;
  if (!f.has_box(v)) {
    throw Error(ErrorKind::DanglingRef,
                "diagram has no box " + std::to_string(i));
  }
  return substitute(f, {{v, g}});
}

}  // namespace wdalg
