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

#include "wdalg/smc.hpp"

#include <array>
#include <utility>
#include <vector>

#include "wdalg/operad.hpp"

namespace wdalg::smc {

Morphism::Morphism(WiringDiagram diagram) : diagram_(std::move(diagram)) {
  const auto report = validate(diagram_, Mode::strict);
  if (!report.ok() || diagram_.mode() != Mode::strict) {
    throw Error(ErrorKind::InvalidDiagram,
                report.ok() ? "morphism diagrams must be in strict mode"
                            : report.violations.front().message);
  }
}

Morphism generator(const std::string& name, const TypeList& dom,
                   const TypeList& cod) {
  return Morphism(inert(Box{name, dom, cod}), Morphism::Trusted{});
}

Morphism id(const TypeList& types) {
  WiringDiagram d(types, types);
  for (std::size_t i = 0; i < types.size(); ++i) {
    const int p = static_cast<int>(i) + 1;
    d.add_wire({{kInputId, p}, {kOutputId, p}});
  }
  return Morphism(std::move(d), Morphism::Trusted{});
}

Morphism unit() { return id({}); }

namespace {

void wire_through(WiringDiagram& h, int from, int to, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const int p = static_cast<int>(i) + 1;
    h.add_wire({{from, p}, {to, p}});
  }
}

}  // namespace

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.cod() != g.dom()) {
    throw Error(ErrorKind::CompositionMismatch,
                "codomain " + to_string(f.cod()) + " does not match domain " +
                    to_string(g.dom()));
  }
  WiringDiagram h(f.dom(), g.cod());
  const int fv = h.add_box(Box{"", f.dom(), f.cod()});
  const int gv = h.add_box(Box{"", g.dom(), g.cod()});
  wire_through(h, kInputId, fv, f.dom().size());
  wire_through(h, fv, gv, f.cod().size());
  wire_through(h, gv, kOutputId, g.cod().size());
  const std::array parts{f.diagram(), g.diagram()};
  return Morphism(ocompose(h, parts), Morphism::Trusted{});
}

Morphism otimes(const Morphism& f, const Morphism& g) {
  TypeList dom = f.dom();
  dom.insert(dom.end(), g.dom().begin(), g.dom().end());
  TypeList cod = f.cod();
  cod.insert(cod.end(), g.cod().begin(), g.cod().end());
  WiringDiagram h(dom, cod);
  const int fv = h.add_box(Box{"", f.dom(), f.cod()});
  const int gv = h.add_box(Box{"", g.dom(), g.cod()});
  const auto nf_in = static_cast<int>(f.dom().size());
  const auto nf_out = static_cast<int>(f.cod().size());
  wire_through(h, kInputId, fv, f.dom().size());
  wire_through(h, fv, kOutputId, f.cod().size());
  for (std::size_t i = 0; i < g.dom().size(); ++i) {
    const int p = static_cast<int>(i) + 1;
    h.add_wire({{kInputId, nf_in + p}, {gv, p}});
  }
  for (std::size_t i = 0; i < g.cod().size(); ++i) {
    const int p = static_cast<int>(i) + 1;
    h.add_wire({{gv, p}, {kOutputId, nf_out + p}});
  }
  const std::array parts{f.diagram(), g.diagram()};
  return Morphism(ocompose(h, parts), Morphism::Trusted{});
}

Morphism permute(const TypeList& types, std::span<const int> sigma) {
  const std::size_t n = types.size();
  if (sigma.size() != n) {
    throw Error(ErrorKind::BadPermutation,
                "permutation has " + std::to_string(sigma.size()) +
                    " entries for " + std::to_string(n) + " wires");
  }
  std::vector<bool> hit(n, false);
  for (int image : sigma) {
    if (image < 1 || static_cast<std::size_t>(image) > n ||
        hit[image - 1]) {
      throw Error(ErrorKind::BadPermutation,
                  "not a permutation of 1.." + std::to_string(n));
    }
    hit[image - 1] = true;
  }
  TypeList cod = types;
  for (std::size_t i = 0; i < n; ++i) {
    cod[sigma[i] - 1] = types[i];
  }
  WiringDiagram d(types, cod);
  for (std::size_t i = 0; i < n; ++i) {
    d.add_wire({{kInputId, static_cast<int>(i) + 1}, {kOutputId, sigma[i]}});
  }
  return Morphism(std::move(d), Morphism::Trusted{});
}

Morphism braid(const TypeList& a, const TypeList& b) {
  TypeList types = a;
  types.insert(types.end(), b.begin(), b.end());
  std::vector<int> sigma(types.size());
  const auto na = static_cast<int>(a.size());
  const auto nb = static_cast<int>(b.size());
  for (int i = 0; i < na + nb; ++i) {
    sigma[i] = i < na ? i + 1 + nb : i + 1 - na;
  }
  return permute(types, sigma);
}

}  // namespace wdalg::smc
