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

#include "random_diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "wdalg/equality.hpp"

namespace wdalg::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct Source {
  PortRef port;
  PortType type;
};

}  // namespace

TypeList type_palette(int count) {
  static const char* const kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  TypeList out;
  for (int k = 0; k < count; ++k) {
    out.emplace_back(kNames[k % 8] + (k >= 8 ? std::to_string(k / 8) : ""));
  }
  return out;
}

TypeList random_types(Rng& rng, const TypeList& palette, int max_len) {
  TypeList out;
  const int n = uniform(rng, 0, max_len);
  for (int k = 0; k < n; ++k) {
    out.push_back(palette[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(palette.size()) - 1))]);
  }
  return out;
}

WiringDiagram random_strict_diagram(Rng& rng, const TypeList& inputs,
                                    const TypeList& outputs,
                                    const DiagramShape& shape) {
  const TypeList palette = type_palette(shape.type_count);
  // Rejection sampling: the closing box that absorbs leftover ports may come
  // out too wide or push the box count over the limit.
  for (;;) {
    WiringDiagram d(inputs, outputs);
    std::vector<Wire> wires;
    std::vector<Source> pool;
    for (std::size_t p = 0; p < inputs.size(); ++p) {
      pool.push_back({{kInputId, static_cast<int>(p) + 1}, inputs[p]});
    }
    const int free_boxes = uniform(rng, 0, shape.max_boxes);
    for (int b = 0; b < free_boxes; ++b) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const int n_in =
          uniform(rng, 0, std::min<int>(shape.max_ports,
                                        static_cast<int>(pool.size())));
      TypeList box_in;
      std::vector<Source> taken(pool.end() - n_in, pool.end());
      pool.erase(pool.end() - n_in, pool.end());
      for (const auto& s : taken) {
        box_in.push_back(s.type);
      }
      TypeList box_out = random_types(rng, palette, shape.max_ports);
      const std::string label(
          1, static_cast<char>('f' + uniform(rng, 0, shape.label_count - 1)));
      const int v = d.add_box(Box{label, box_in, box_out});
      for (int k = 0; k < n_in; ++k) {
        wires.push_back({taken[static_cast<std::size_t>(k)].port, {v, k + 1}});
      }
      for (std::size_t k = 0; k < box_out.size(); ++k) {
        pool.push_back({{v, static_cast<int>(k) + 1}, box_out[k]});
      }
    }
    // Match leftovers to outer outputs by type; whatever remains meets in
    // one closing box.
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> unmatched_outputs;
    for (std::size_t p = 0; p < outputs.size(); ++p) {
      const auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& s) {
        return s.type == outputs[p];
      });
      if (it == pool.end()) {
        unmatched_outputs.push_back(static_cast<int>(p) + 1);
        continue;
      }
      wires.push_back({it->port, {kOutputId, static_cast<int>(p) + 1}});
      pool.erase(it);
    }
    if (!pool.empty() || !unmatched_outputs.empty()) {
      if (free_boxes + 1 > shape.max_boxes ||
          static_cast<int>(pool.size()) > shape.max_ports ||
          static_cast<int>(unmatched_outputs.size()) > shape.max_ports) {
        continue;
      }
      TypeList box_in;
      TypeList box_out;
      for (const auto& s : pool) {
        box_in.push_back(s.type);
      }
      for (int p : unmatched_outputs) {
        box_out.push_back(outputs[static_cast<std::size_t>(p) - 1]);
      }
      const std::string label(
          1, static_cast<char>('f' + uniform(rng, 0, shape.label_count - 1)));
      const int v = d.add_box(Box{label, box_in, box_out});
      for (std::size_t k = 0; k < pool.size(); ++k) {
        wires.push_back({pool[k].port, {v, static_cast<int>(k) + 1}});
      }
      for (std::size_t k = 0; k < unmatched_outputs.size(); ++k) {
        wires.push_back(
            {{v, static_cast<int>(k) + 1}, {kOutputId, unmatched_outputs[k]}});
      }
    }
    std::shuffle(wires.begin(), wires.end(), rng);
    d.add_wires(wires);
    return d;
  }
}

WiringDiagram random_strict_diagram(Rng& rng, const DiagramShape& shape) {
  const TypeList palette = type_palette(shape.type_count);
  const TypeList in = random_types(rng, palette, shape.max_ports);
  const TypeList out = random_types(rng, palette, shape.max_ports);
  return random_strict_diagram(rng, in, out, shape);
}

WiringDiagram shuffled_copy(Rng& rng, const WiringDiagram& d) {
  std::vector<int> perm(d.box_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  WiringDiagram r = relabel_boxes(d, perm);
  std::vector<Wire> wires(r.wires().begin(), r.wires().end());
  std::shuffle(wires.begin(), wires.end(), rng);
  WiringDiagram out(r.input_types(), r.output_types(), r.mode());
  for (int id : r.box_ids()) {
    out.add_box(r.box(id));
  }
  for (const auto& w : wires) {
    out.add_wire_unchecked(w);
  }
  return out;
}

expr::Signature signature_over(const TypeList& palette) {
  expr::Signature sig;
  for (const auto& t : palette) {
    sig.add_object(t);
  }
  return sig;
}

expr::ExprPtr random_expr(Rng& rng, expr::Signature& sig, const TypeList& dom,
                          const TypeList& cod, int depth,
                          const TypeList& palette) {
  const int choice = depth <= 0 ? 0 : uniform(rng, 0, 3);
  if (choice == 1) {
    const TypeList mid = random_types(rng, palette, 3);
    return expr::seq(random_expr(rng, sig, dom, mid, depth - 1, palette),
                     random_expr(rng, sig, mid, cod, depth - 1, palette));
  }
  if (choice == 2) {
    const auto cut_in = static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(dom.size())));
    const auto cut_out = static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(cod.size())));
    const TypeList d1(dom.begin(), dom.begin() + cut_in);
    const TypeList d2(dom.begin() + cut_in, dom.end());
    const TypeList c1(cod.begin(), cod.begin() + cut_out);
    const TypeList c2(cod.begin() + cut_out, cod.end());
    return expr::tensor(random_expr(rng, sig, d1, c1, depth - 1, palette),
                        random_expr(rng, sig, d2, c2, depth - 1, palette));
  }
  if (choice == 3 && dom.size() >= 2) {
    std::vector<int> sigma(dom.size());
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    TypeList permuted = dom;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      permuted[static_cast<std::size_t>(sigma[k]) - 1] = dom[k];
    }
    return expr::seq(expr::perm(dom, sigma),
                     random_expr(rng, sig, permuted, cod, depth - 1, palette));
  }
  const std::string name = "g" + std::to_string(sig.generators().size());
  sig.add_generator(name, {dom, cod});
  return expr::gen(name);
}

Nest random_nest(Rng& rng, const DiagramShape& host_shape,
                 const DiagramShape& sub_shape) {
  for (;;) {
    WiringDiagram host = random_strict_diagram(rng, host_shape);
    if (host.box_count() == 0) {
      continue;
    }
    std::uniform_int_distribution<int> pick(
        1, static_cast<int>(host.box_count()));
    const int i = pick(rng);
    const Box& b = host.box(i + 2);
    WiringDiagram sub = random_strict_diagram(rng, b.inputs, b.outputs,
                                              sub_shape);
    return Nest{std::move(host), i, std::move(sub)};
  }
}

}  // namespace wdalg::testing
