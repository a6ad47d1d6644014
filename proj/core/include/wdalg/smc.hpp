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

// Morphisms of a free strict symmetric monoidal category, represented as
// strict wiring diagrams whose boxes are generators. Sequential and parallel
// composition build a two-box template diagram and fill it by operadic
// composition, so the monoidal axioms hold on the nose up to diagram
// isomorphism.

#ifndef WDALG_SMC_HPP_
#define WDALG_SMC_HPP_

#include <span>
#include <string>

#include "wdalg/diagram.hpp"

namespace wdalg::smc {

class Morphism {
 public:
  // Throws InvalidDiagram unless the diagram validates in strict mode.
  explicit Morphism(WiringDiagram diagram);

  [[nodiscard]] const WiringDiagram& diagram() const noexcept {
    return diagram_;
  }
  [[nodiscard]] const TypeList& dom() const noexcept {
    return diagram_.input_types();
  }
  [[nodiscard]] const TypeList& cod() const noexcept {
    return diagram_.output_types();
  }

  // For results of operations that preserve strict validity.
  struct Trusted {};
  Morphism(WiringDiagram diagram, Trusted) : diagram_(std::move(diagram)) {}

 private:
  WiringDiagram diagram_;
};

Morphism generator(const std::string& name, const TypeList& dom,
                   const TypeList& cod);
Morphism id(const TypeList& types);
Morphism unit();

// f ; g. Throws CompositionMismatch unless cod(f) == dom(g) pointwise.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism otimes(const Morphism& f, const Morphism& g);

// Block transposition a ++ b -> b ++ a.
Morphism braid(const TypeList& a, const TypeList& b);

// Wires input i to output sigma[i-1] (1-based images). Throws BadPermutation.
Morphism permute(const TypeList& types, std::span<const int> sigma);

}  // namespace wdalg::smc

#endif  // WDALG_SMC_HPP_
