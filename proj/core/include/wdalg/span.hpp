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

// Spans of typed finite sets and their block-matrix calculus.
//
// A span dom <- apex -> cod is stored with its legs as index maps. Its fully
// decomposed matrix has one row per domain element, one column per codomain
// element, and at (i, j) the set of apex elements ("wires") attached to
// both. Composition multiplies matrices entrywise by Cartesian product of
// wire sets; sums take unions of disjointly named wires.
//
// A wiring diagram with inner boxes t1..tn and outer box v is the span
//
//     v- (+) t1+ (+) ... (+) tn+  <-  wires  ->  t1- (+) ... (+) tn- (+) v+
//
// whose legs are bijections and whose box-to-box wires generate a strict
// partial order (the progress condition). compose_formula() composes two of
// these declaratively; it is the independent counterpart to substitute().

#ifndef WDALG_SPAN_HPP_
#define WDALG_SPAN_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wdalg/diagram.hpp"
#include "wdalg/operad.hpp"

namespace wdalg {

class TypedFiniteSet {
 public:
  TypedFiniteSet() = default;
  // Throws TypeError on duplicate element names or a size mismatch.
  TypedFiniteSet(std::vector<std::string> elements, TypeList types);

  // Elements prefix1..prefixN typed by the list.
  static TypedFiniteSet from_list(const TypeList& types,
                                  std::string_view prefix);

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] const std::string& element(std::size_t i) const {
    return elements_.at(i);
  }
  [[nodiscard]] const PortType& type(std::size_t i) const {
    return types_.at(i);
  }
  [[nodiscard]] const std::vector<std::string>& elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] const TypeList& types() const noexcept { return types_; }
  [[nodiscard]] std::optional<std::size_t> index_of(
      std::string_view name) const;

  // Sub-basis picked by index, in the given order.
  [[nodiscard]] TypedFiniteSet select(std::span<const std::size_t> idx) const;

  friend bool operator==(const TypedFiniteSet& a, const TypedFiniteSet& b) {
    return a.elements_ == b.elements_ && a.types_ == b.types_;
  }

 private:
  std::vector<std::string> elements_;
  TypeList types_;
};

// Disjoint union; element names must already be distinct.
TypedFiniteSet direct_sum(const TypedFiniteSet& a, const TypedFiniteSet& b);

struct SignedBox {
  TypedFiniteSet minus;  // inputs
  TypedFiniteSet plus;   // outputs

  static SignedBox from_lists(const TypeList& inputs, const TypeList& outputs);
  static SignedBox from_box(const Box& box) {
    return from_lists(box.inputs, box.outputs);
  }

  friend bool operator==(const SignedBox&, const SignedBox&) = default;
};

struct Span {
  TypedFiniteSet dom;
  TypedFiniteSet apex;
  TypedFiniteSet cod;
  std::vector<std::size_t> src_leg;  // apex -> dom
  std::vector<std::size_t> tgt_leg;  // apex -> cod

  Span() = default;
  // Throws IndexOutOfRange for partial legs, TypeMismatch for legs that do
  // not preserve types.
  Span(TypedFiniteSet dom, TypedFiniteSet apex, TypedFiniteSet cod,
       std::vector<std::size_t> src_leg, std::vector<std::size_t> tgt_leg);

  [[nodiscard]] bool is_bijective() const;
};

class SpanMatrix {
 public:
  using WireSet = std::vector<std::string>;

  SpanMatrix() = default;
  // The zero matrix on the given bases.
  SpanMatrix(TypedFiniteSet rows, TypedFiniteSet cols);

  [[nodiscard]] const TypedFiniteSet& rows() const noexcept { return rows_; }
  [[nodiscard]] const TypedFiniteSet& cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t col_count() const noexcept { return cols_.size(); }

  [[nodiscard]] const WireSet& at(std::size_t i, std::size_t j) const;
  WireSet& at(std::size_t i, std::size_t j);

  [[nodiscard]] std::size_t wire_count() const;
  [[nodiscard]] std::vector<std::string> wire_names() const;
  // Every row and every column holds exactly one wire in total.
  [[nodiscard]] bool is_bijective() const;
  [[nodiscard]] bool has_disjoint_entries() const;

  // Tab-separated dump: a header line of column elements, then one line per
  // row element with cells written "0" or "{w1,w2}".
  [[nodiscard]] std::string dump() const;

  friend bool operator==(const SpanMatrix&, const SpanMatrix&) = default;

 private:
  TypedFiniteSet rows_;
  TypedFiniteSet cols_;
  std::vector<WireSet> entries_;
};

// Builds a matrix from literal cells; a test and CLI convenience.
SpanMatrix make_matrix(TypedFiniteSet rows, TypedFiniteSet cols,
                       const std::vector<std::vector<SpanMatrix::WireSet>>&
                           cells);

SpanMatrix span_to_matrix(const Span& s);
// Throws DuplicateWire if a wire name appears in two cells, TypeMismatch if
// a non-empty cell joins elements of different types.
Span matrix_to_span(const SpanMatrix& m);

// Name of the composite of wires a and b: "(a,b)", flattening tuples so that
// chains read "(a,b,c)".
std::string pair_wire_name(std::string_view a, std::string_view b);

// Throws BasisMismatch unless a's columns and b's rows agree in length and
// types. Throws DuplicateWire if flattened pair names collide.
SpanMatrix mat_mul(const SpanMatrix& a, const SpanMatrix& b);
// Entrywise union. Wires of b whose names clash with a are renamed by
// appending primes. Throws BasisMismatch unless bases agree.
SpanMatrix mat_add(const SpanMatrix& a, const SpanMatrix& b);

// Sub-matrix on the chosen rows and columns (indices into the bases).
SpanMatrix component(const SpanMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);
// Places x at the chosen positions of a zero matrix on the ambient bases.
SpanMatrix embed(const SpanMatrix& x, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols,
                 const TypedFiniteSet& ambient_rows,
                 const TypedFiniteSet& ambient_cols);

// Isomorphism of spans with identical feet: equal wire counts entrywise.
bool span_iso(const SpanMatrix& a, const SpanMatrix& b);
bool span_iso(const Span& a, const Span& b);

// Wiring diagrams as spans -----------------------------------------------

struct WiringDiagramSpan {
  std::vector<SignedBox> inner;
  SignedBox outer;
  Span span;

  [[nodiscard]] SpanMatrix matrix() const { return span_to_matrix(span); }
};

// v- (+) t1+ (+) ... (+) tn+, elements named "v.<e>" and "t<k>.<e>".
TypedFiniteSet wd_domain(const SignedBox& outer,
                         std::span<const SignedBox> inner);
// t1- (+) ... (+) tn- (+) v+.
TypedFiniteSet wd_codomain(const SignedBox& outer,
                           std::span<const SignedBox> inner);

// Assembles a diagram span from wires given by (domain index, codomain
// index) pairs. Apex elements take the given names.
WiringDiagramSpan make_wd_span(
    SignedBox outer, std::vector<SignedBox> inner,
    std::vector<std::string> wire_names,
    const std::vector<std::pair<std::size_t, std::size_t>>& ends);

// Throws NotStrict unless d validates in strict mode. Wire k is named
// prefix + k (1-based).
WiringDiagramSpan wd_to_span(const WiringDiagram& d,
                             std::string_view wire_prefix = "w");

// Throws ProgressViolation if the span fails the progress condition and
// NotStrict if its legs are not bijections.
WiringDiagram span_to_wd(const WiringDiagramSpan& ws,
                         std::span<const std::string> labels);

struct PartialOrder {
  // less[i][j]: inner box i+1 precedes inner box j+1.
  std::vector<std::vector<bool>> less;

  [[nodiscard]] bool precedes(std::size_t i, std::size_t j) const {
    return less.at(i - 1).at(j - 1);
  }
  [[nodiscard]] std::size_t pair_count() const;
};

struct CycleError {
  // 1-based inner box indices along a shortest cycle.
  std::vector<std::size_t> witness;
};

std::variant<PartialOrder, CycleError> progress_order(
    const WiringDiagramSpan& ws);

struct ComposeTrace {
  WiringDiagramSpan result;
  // Which block of the composite each result wire came from, keyed by name.
  std::map<std::string, FuseCase> block_of;
};

// Partial composite of psi into the i-th (1-based) inner box of phi. The
// replacing boxes are spliced into phi's box list at position i. Throws
// SignatureMismatch, IndexOutOfRange, NotStrict or ProgressViolation.
WiringDiagramSpan compose_formula(const WiringDiagramSpan& psi, std::size_t i,
                                  const WiringDiagramSpan& phi);
ComposeTrace compose_formula_traced(const WiringDiagramSpan& psi,
                                    std::size_t i,
                                    const WiringDiagramSpan& phi);

// Reorders inner boxes: new box k is old box order[k] (0-based).
WiringDiagramSpan permute_inner(const WiringDiagramSpan& ws,
                                std::span<const std::size_t> order);

// Same boxes and span-isomorphic wiring.
bool span_iso(const WiringDiagramSpan& a, const WiringDiagramSpan& b);

// Generator spans ----------------------------------------------------------

// Series: t = (a, b), t' = (b, c), outer (a, c). Matrix diag(A, B, C).
WiringDiagramSpan seq_gen(const TypeList& a, const TypeList& b,
                          const TypeList& c,
                          const std::vector<std::string>& names_a,
                          const std::vector<std::string>& names_b,
                          const std::vector<std::string>& names_c);

// Parallel: t = (t_in, t_out), t' = (u_in, u_out), outer
// (t_in ++ u_in, t_out ++ u_out). Matrix diag(A, A', B, B').
WiringDiagramSpan para_gen(const TypeList& t_in, const TypeList& t_out,
                           const TypeList& u_in, const TypeList& u_out,
                           const std::vector<std::string>& names_a,
                           const std::vector<std::string>& names_a2,
                           const std::vector<std::string>& names_b,
                           const std::vector<std::string>& names_b2);

// No inner boxes; outer input k is wired to outer output sigma[k] (1-based).
WiringDiagramSpan sym_gen(const TypeList& types, std::span<const int> sigma,
                          const std::vector<std::string>& names);

}  // namespace wdalg

#endif  // WDALG_SPAN_HPP_
