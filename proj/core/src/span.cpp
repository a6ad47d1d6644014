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

#include "wdalg/span.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "cycles.hpp"

namespace wdalg {

// TypedFiniteSet ---------------------------------------------------------

TypedFiniteSet::TypedFiniteSet(std::vector<std::string> elements,
                               TypeList types)
    : elements_(std::move(elements)), types_(std::move(types)) {
  if (elements_.size() != types_.size()) {
    throw Error(ErrorKind::TypeError, "every element needs exactly one type");
  }
  std::unordered_set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::TypeError, "duplicate element '" + e + "'");
    }
  }
}

TypedFiniteSet TypedFiniteSet::from_list(const TypeList& types,
                                         std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    names.push_back(std::string(prefix) + std::to_string(i + 1));
  }
  return TypedFiniteSet(std::move(names), types);
}

std::optional<std::size_t> TypedFiniteSet::index_of(
    std::string_view name) const {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

TypedFiniteSet TypedFiniteSet::select(
    std::span<const std::size_t> idx) const {
  std::vector<std::string> names;
  TypeList types;
  names.reserve(idx.size());
  types.reserve(idx.size());
  for (std::size_t i : idx) {
    if (i >= elements_.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "basis index " + std::to_string(i) + " out of range");
    }
    names.push_back(elements_[i]);
    types.push_back(types_[i]);
  }
  return TypedFiniteSet(std::move(names), std::move(types));
}

TypedFiniteSet direct_sum(const TypedFiniteSet& a, const TypedFiniteSet& b) {
  auto names = a.elements();
  names.insert(names.end(), b.elements().begin(), b.elements().end());
  auto types = a.types();
  types.insert(types.end(), b.types().begin(), b.types().end());
  return TypedFiniteSet(std::move(names), std::move(types));
}

SignedBox SignedBox::from_lists(const TypeList& inputs,
                                const TypeList& outputs) {
  return {TypedFiniteSet::from_list(inputs, "in"),
          TypedFiniteSet::from_list(outputs, "out")};
}

// Span ---------------------------------------------------------------------

Span::Span(TypedFiniteSet dom_, TypedFiniteSet apex_, TypedFiniteSet cod_,
           std::vector<std::size_t> src, std::vector<std::size_t> tgt)
    : dom(std::move(dom_)),
      apex(std::move(apex_)),
      cod(std::move(cod_)),
      src_leg(std::move(src)),
      tgt_leg(std::move(tgt)) {
  if (src_leg.size() != apex.size() || tgt_leg.size() != apex.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "span legs must be total");
  }
  for (std::size_t w = 0; w < apex.size(); ++w) {
    if (src_leg[w] >= dom.size() || tgt_leg[w] >= cod.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "leg of wire " + apex.element(w) + " out of range");
    }
    if (dom.type(src_leg[w]) != apex.type(w) ||
        cod.type(tgt_leg[w]) != apex.type(w)) {
      throw Error(ErrorKind::TypeMismatch,
                  "legs of wire " + apex.element(w) + " do not preserve type");
    }
  }
}

bool Span::is_bijective() const {
  if (apex.size() != dom.size() || apex.size() != cod.size()) {
    return false;
  }
  std::vector<bool> hit_dom(dom.size(), false);
  std::vector<bool> hit_cod(cod.size(), false);
  for (std::size_t w = 0; w < apex.size(); ++w) {
    if (hit_dom[src_leg[w]] || hit_cod[tgt_leg[w]]) {
      return false;
    }
    hit_dom[src_leg[w]] = true;
    hit_cod[tgt_leg[w]] = true;
  }
  return true;
}

// SpanMatrix ---------------------------------------------------------------

SpanMatrix::SpanMatrix(TypedFiniteSet rows, TypedFiniteSet cols)
    : rows_(std::move(rows)),
      cols_(std::move(cols)),
      entries_(rows_.size() * cols_.size()) {}

const SpanMatrix::WireSet& SpanMatrix::at(std::size_t i,
                                          std::size_t j) const {
  if (i >= rows_.size() || j >= cols_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix entry out of range");
  }
  return entries_[i * cols_.size() + j];
}

SpanMatrix::WireSet& SpanMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_.size() || j >= cols_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix entry out of range");
  }
  return entries_[i * cols_.size() + j];
}

std::size_t SpanMatrix::wire_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) {
    n += e.size();
  }
  return n;
}

std::vector<std::string> SpanMatrix::wire_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

bool SpanMatrix::is_bijective() const {
  for (std::size_t i = 0; i < row_count(); ++i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < col_count(); ++j) {
      n += at(i, j).size();
    }
    if (n != 1) {
      return false;
    }
  }
  for (std::size_t j = 0; j < col_count(); ++j) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < row_count(); ++i) {
      n += at(i, j).size();
    }
    if (n != 1) {
      return false;
    }
  }
  return true;
}

bool SpanMatrix::has_disjoint_entries() const {
  std::unordered_set<std::string> seen;
  for (const auto& e : entries_) {
    for (const auto& w : e) {
      if (!seen.insert(w).second) {
        return false;
      }
    }
  }
  return true;
}

std::string SpanMatrix::dump() const {
  std::ostringstream out;
  for (const auto& c : cols_.elements()) {
    out << '\t' << c;
  }
  out << '\n';
  for (std::size_t i = 0; i < row_count(); ++i) {
    out << rows_.element(i);
    for (std::size_t j = 0; j < col_count(); ++j) {
      const auto& e = at(i, j);
      out << '\t';
      if (e.empty()) {
        out << '0';
        continue;
      }
      out << '{';
      for (std::size_t k = 0; k < e.size(); ++k) {
        out << (k > 0 ? "," : "") << e[k];
      }
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

SpanMatrix make_matrix(
    TypedFiniteSet rows, TypedFiniteSet cols,
    const std::vector<std::vector<SpanMatrix::WireSet>>& cells) {
  SpanMatrix m(std::move(rows), std::move(cols));
  if (cells.size() != m.row_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "wrong number of matrix rows");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() != m.col_count()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "wrong number of matrix columns");
    }
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      m.at(i, j) = cells[i][j];
    }
  }
  return m;
}

SpanMatrix span_to_matrix(const Span& s) {
  SpanMatrix m(s.dom, s.cod);
  for (std::size_t w = 0; w < s.apex.size(); ++w) {
    m.at(s.src_leg[w], s.tgt_leg[w]).push_back(s.apex.element(w));
  }
  return m;
}

Span matrix_to_span(const SpanMatrix& m) {
  std::vector<std::string> names;
  TypeList types;
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) {
      const auto& e = m.at(i, j);
      if (!e.empty() && m.rows().type(i) != m.cols().type(j)) {
        throw Error(ErrorKind::TypeMismatch,
                    "wires join " + m.rows().element(i) + " and " +
                        m.cols().element(j) + " of different types");
      }
      for (const auto& w : e) {
        if (!seen.insert(w).second) {
          throw Error(ErrorKind::DuplicateWire, "wire " + w + " repeated");
        }
        names.push_back(w);
        types.push_back(m.rows().type(i));
        src.push_back(i);
        tgt.push_back(j);
      }
    }
  }
  return Span(m.rows(), TypedFiniteSet(std::move(names), std::move(types)),
              m.cols(), std::move(src), std::move(tgt));
}

// Matrix algebra -----------------------------------------------------------

namespace {

std::string_view tuple_body(std::string_view name) {
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') {
    return name.substr(1, name.size() - 2);
  }
  return name;
}

bool same_types(const TypedFiniteSet& a, const TypedFiniteSet& b) {
  return a.types() == b.types();
}

}  // namespace

std::string pair_wire_name(std::string_view a, std::string_view b) {
  std::string out = "(";
  out += tuple_body(a);
  out += ',';
  out += tuple_body(b);
  out += ')';
  return out;
}

SpanMatrix mat_mul(const SpanMatrix& a, const SpanMatrix& b) {
  if (!same_types(a.cols(), b.rows())) {
    throw Error(ErrorKind::BasisMismatch,
                "cannot multiply " + std::to_string(a.row_count()) + "x" +
                    std::to_string(a.col_count()) + " by " +
                    std::to_string(b.row_count()) + "x" +
                    std::to_string(b.col_count()) +
                    " matrix with incompatible inner basis");
  }
  SpanMatrix out(a.rows(), b.cols());
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < b.col_count(); ++j) {
      auto& cell = out.at(i, j);
      for (std::size_t k = 0; k < a.col_count(); ++k) {
        for (const auto& w1 : a.at(i, k)) {
          for (const auto& w2 : b.at(k, j)) {
            auto name = pair_wire_name(w1, w2);
            if (!seen.insert(name).second) {
              throw Error(ErrorKind::DuplicateWire,
                          "composite wire name " + name + " is ambiguous");
            }
            cell.push_back(std::move(name));
          }
        }
      }
    }
  }
  return out;
}

SpanMatrix mat_add(const SpanMatrix& a, const SpanMatrix& b) {
  if (!same_types(a.rows(), b.rows()) || !same_types(a.cols(), b.cols())) {
    throw Error(ErrorKind::BasisMismatch, "summands have different bases");
  }
  SpanMatrix out = a;
  auto taken_list = a.wire_names();
  std::unordered_set<std::string> taken(taken_list.begin(), taken_list.end());
  for (std::size_t i = 0; i < b.row_count(); ++i) {
    for (std::size_t j = 0; j < b.col_count(); ++j) {
      for (const auto& w : b.at(i, j)) {
        std::string name = w;
        while (taken.contains(name)) {
          name += '\'';
        }
        taken.insert(name);
        out.at(i, j).push_back(std::move(name));
      }
    }
  }
  return out;
}

SpanMatrix component(const SpanMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  SpanMatrix out(m.rows().select(rows), m.cols().select(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = m.at(rows[i], cols[j]);
    }
  }
  return out;
}

SpanMatrix embed(const SpanMatrix& x, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols,
                 const TypedFiniteSet& ambient_rows,
                 const TypedFiniteSet& ambient_cols) {
  if (rows.size() != x.row_count() || cols.size() != x.col_count()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "embedding block has the wrong shape");
  }
  SpanMatrix out(ambient_rows, ambient_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= ambient_rows.size() ||
        ambient_rows.type(rows[i]) != x.rows().type(i)) {
      throw Error(ErrorKind::IndexOutOfRange, "bad embedding row");
    }
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= ambient_cols.size() ||
        ambient_cols.type(cols[j]) != x.cols().type(j)) {
      throw Error(ErrorKind::IndexOutOfRange, "bad embedding column");
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(rows[i], cols[j]) = x.at(i, j);
    }
  }
  return out;
}

bool span_iso(const SpanMatrix& a, const SpanMatrix& b) {
  if (!(a.rows() == b.rows()) || !(a.cols() == b.cols())) {
    return false;
  }
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      if (a.at(i, j).size() != b.at(i, j).size()) {
        return false;
      }
    }
  }
  return true;
}

bool span_iso(const Span& a, const Span& b) {
  return span_iso(span_to_matrix(a), span_to_matrix(b));
}

// Wiring diagram spans -----------------------------------------------------

namespace {

// Position of a port in the direct-sum feet of a diagram span. Box 0 is the
// outer box; box k >= 1 is inner box k.
struct PortAddr {
  std::size_t box;
  std::size_t port;
};

class Layout {
 public:
  Layout(const SignedBox& outer, std::span<const SignedBox> inner) {
    std::size_t d = outer.minus.size();
    std::size_t c = 0;
    for (const auto& b : inner) {
      plus_offset_.push_back(d);
      minus_offset_.push_back(c);
      plus_size_.push_back(b.plus.size());
      minus_size_.push_back(b.minus.size());
      d += b.plus.size();
      c += b.minus.size();
    }
    outer_minus_ = outer.minus.size();
    outer_plus_offset_ = c;
    dom_size_ = d;
    cod_size_ = c + outer.plus.size();
  }

  [[nodiscard]] std::size_t dom_size() const { return dom_size_; }
  [[nodiscard]] std::size_t cod_size() const { return cod_size_; }

  [[nodiscard]] std::size_t dom_index(PortAddr a) const {
    return a.box == 0 ? a.port : plus_offset_[a.box - 1] + a.port;
  }
  [[nodiscard]] std::size_t cod_index(PortAddr a) const {
    return a.box == 0 ? outer_plus_offset_ + a.port
                      : minus_offset_[a.box - 1] + a.port;
  }

  [[nodiscard]] PortAddr dom_addr(std::size_t idx) const {
    if (idx < outer_minus_) {
      return {0, idx};
    }
    for (std::size_t k = 0; k < plus_offset_.size(); ++k) {
      if (idx < plus_offset_[k] + plus_size_[k]) {
        return {k + 1, idx - plus_offset_[k]};
      }
    }
    throw Error(ErrorKind::IndexOutOfRange, "domain index out of range");
  }
  [[nodiscard]] PortAddr cod_addr(std::size_t idx) const {
    if (idx >= outer_plus_offset_) {
      return {0, idx - outer_plus_offset_};
    }
    for (std::size_t k = 0; k < minus_offset_.size(); ++k) {
      if (idx < minus_offset_[k] + minus_size_[k]) {
        return {k + 1, idx - minus_offset_[k]};
      }
    }
    throw Error(ErrorKind::IndexOutOfRange, "codomain index out of range");
  }

  // Domain indices of inner box k's outputs, codomain indices of its inputs.
  [[nodiscard]] std::vector<std::size_t> plus_block(std::size_t k) const {
    std::vector<std::size_t> out(plus_size_[k - 1]);
    std::iota(out.begin(), out.end(), plus_offset_[k - 1]);
    return out;
  }
  [[nodiscard]] std::vector<std::size_t> minus_block(std::size_t k) const {
    std::vector<std::size_t> out(minus_size_[k - 1]);
    std::iota(out.begin(), out.end(), minus_offset_[k - 1]);
    return out;
  }
  [[nodiscard]] std::vector<std::size_t> outer_minus_block() const {
    std::vector<std::size_t> out(outer_minus_);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  [[nodiscard]] std::vector<std::size_t> outer_plus_block() const {
    std::vector<std::size_t> out(cod_size_ - outer_plus_offset_);
    std::iota(out.begin(), out.end(), outer_plus_offset_);
    return out;
  }

 private:
  std::vector<std::size_t> plus_offset_;
  std::vector<std::size_t> minus_offset_;
  std::vector<std::size_t> plus_size_;
  std::vector<std::size_t> minus_size_;
  std::size_t outer_minus_ = 0;
  std::size_t outer_plus_offset_ = 0;
  std::size_t dom_size_ = 0;
  std::size_t cod_size_ = 0;
};

TypedFiniteSet qualified(const TypedFiniteSet& s, const std::string& box) {
  std::vector<std::string> names;
  names.reserve(s.size());
  for (const auto& e : s.elements()) {
    names.push_back(box + "." + e);
  }
  return TypedFiniteSet(std::move(names), s.types());
}

void require_bijective(const WiringDiagramSpan& ws, std::string_view what) {
  if (!ws.span.is_bijective()) {
    throw Error(ErrorKind::NotStrict,
                std::string(what) + " is not a span of bijections");
  }
}

void require_progress(const WiringDiagramSpan& ws, std::string_view what) {
  const auto order = progress_order(ws);
  if (const auto* cyc = std::get_if<CycleError>(&order)) {
    std::string msg = std::string(what) + " violates the progress condition:";
    for (auto k : cyc->witness) {
      msg += " t" + std::to_string(k);
    }
    throw Error(ErrorKind::ProgressViolation, msg);
  }
}

}  // namespace

TypedFiniteSet wd_domain(const SignedBox& outer,
                         std::span<const SignedBox> inner) {
  TypedFiniteSet out = qualified(outer.minus, "v");
  for (std::size_t k = 0; k < inner.size(); ++k) {
    out = direct_sum(out, qualified(inner[k].plus, "t" + std::to_string(k + 1)));
  }
  return out;
}

TypedFiniteSet wd_codomain(const SignedBox& outer,
                           std::span<const SignedBox> inner) {
  TypedFiniteSet out;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    out = direct_sum(out,
                     qualified(inner[k].minus, "t" + std::to_string(k + 1)));
  }
  return direct_sum(out, qualified(outer.plus, "v"));
}

WiringDiagramSpan make_wd_span(
    SignedBox outer, std::vector<SignedBox> inner,
    std::vector<std::string> wire_names,
    const std::vector<std::pair<std::size_t, std::size_t>>& ends) {
  if (wire_names.size() != ends.size()) {
    throw Error(ErrorKind::TypeMismatch, "one name per wire is required");
  }
  auto dom = wd_domain(outer, inner);
  auto cod = wd_codomain(outer, inner);
  TypeList types;
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  for (const auto& [d, c] : ends) {
    if (d >= dom.size() || c >= cod.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "wire end out of range");
    }
    types.push_back(dom.type(d));
    src.push_back(d);
    tgt.push_back(c);
  }
  Span span(std::move(dom),
            TypedFiniteSet(std::move(wire_names), std::move(types)),
            std::move(cod), std::move(src), std::move(tgt));
  return {std::move(inner), std::move(outer), std::move(span)};
}

WiringDiagramSpan wd_to_span(const WiringDiagram& d,
                             std::string_view wire_prefix) {
  const auto report = validate(d, Mode::strict);
  if (!report.ok()) {
    throw Error(ErrorKind::NotStrict, report.violations.front().message);
  }
  SignedBox outer = SignedBox::from_lists(d.input_types(), d.output_types());
  std::vector<SignedBox> inner;
  inner.reserve(d.box_count());
  for (const auto& b : d.boxes()) {
    inner.push_back(SignedBox::from_box(b));
  }
  const Layout layout(outer, inner);
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t k = 0; k < d.wires().size(); ++k) {
    const Wire& w = d.wires()[k];
    const auto src_box = w.source.box == kInputId
                             ? std::size_t{0}
                             : static_cast<std::size_t>(w.source.box - 2);
    const auto tgt_box = w.target.box == kOutputId
                             ? std::size_t{0}
                             : static_cast<std::size_t>(w.target.box - 2);
    ends.emplace_back(
        layout.dom_index({src_box, static_cast<std::size_t>(w.source.port - 1)}),
        layout.cod_index(
            {tgt_box, static_cast<std::size_t>(w.target.port - 1)}));
    names.push_back(std::string(wire_prefix) + std::to_string(k + 1));
  }
  return make_wd_span(std::move(outer), std::move(inner), std::move(names),
                      ends);
}

WiringDiagram span_to_wd(const WiringDiagramSpan& ws,
                         std::span<const std::string> labels) {
  if (labels.size() != ws.inner.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "one label per inner box needed");
  }
  require_bijective(ws, "diagram span");
  require_progress(ws, "diagram span");
  WiringDiagram d(ws.outer.minus.types(), ws.outer.plus.types());
  for (std::size_t k = 0; k < ws.inner.size(); ++k) {
    d.add_box(
        Box{labels[k], ws.inner[k].minus.types(), ws.inner[k].plus.types()});
  }
  const Layout layout(ws.outer, ws.inner);
  for (std::size_t w = 0; w < ws.span.apex.size(); ++w) {
    const auto s = layout.dom_addr(ws.span.src_leg[w]);
    const auto t = layout.cod_addr(ws.span.tgt_leg[w]);
    const PortRef src{s.box == 0 ? kInputId : static_cast<int>(s.box) + 2,
                      static_cast<int>(s.port) + 1};
    const PortRef tgt{t.box == 0 ? kOutputId : static_cast<int>(t.box) + 2,
                      static_cast<int>(t.port) + 1};
    d.add_wire({src, tgt});
  }
  return d;
}

std::size_t PartialOrder::pair_count() const {
  std::size_t n = 0;
  for (const auto& row : less) {
    n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  }
  return n;
}

std::variant<PartialOrder, CycleError> progress_order(
    const WiringDiagramSpan& ws) {
  const Layout layout(ws.outer, ws.inner);
  const std::size_t n = ws.inner.size();
  std::vector<std::set<int>> edges(n);
  for (std::size_t w = 0; w < ws.span.apex.size(); ++w) {
    const auto s = layout.dom_addr(ws.span.src_leg[w]);
    const auto t = layout.cod_addr(ws.span.tgt_leg[w]);
    if (s.box != 0 && t.box != 0) {
      edges[s.box - 1].insert(static_cast<int>(t.box) - 1);
    }
  }
  std::vector<std::vector<int>> adj(n);
  for (std::size_t k = 0; k < n; ++k) {
    adj[k].assign(edges[k].begin(), edges[k].end());
  }
  if (auto cycle = detail::shortest_cycle(adj); !cycle.empty()) {
    CycleError err;
    for (int v : cycle) {
      err.witness.push_back(static_cast<std::size_t>(v) + 1);
    }
    return err;
  }
  return PartialOrder{detail::transitive_closure(adj)};
}

ComposeTrace compose_formula_traced(const WiringDiagramSpan& psi,
                                    std::size_t i,
                                    const WiringDiagramSpan& phi) {
  if (i < 1 || i > phi.inner.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "no inner box " + std::to_string(i));
  }
  const SignedBox& target = phi.inner[i - 1];
  if (psi.outer.minus.types() != target.minus.types() ||
      psi.outer.plus.types() != target.plus.types()) {
    throw Error(ErrorKind::SignatureMismatch,
                "outer box " + to_string(psi.outer.minus.types()) + " -> " +
                    to_string(psi.outer.plus.types()) +
                    " does not match inner box " + std::to_string(i) + " " +
                    to_string(target.minus.types()) + " -> " +
                    to_string(target.plus.types()));
  }
  require_bijective(phi, "outer diagram");
  require_bijective(psi, "inner diagram");
  require_progress(phi, "outer diagram");
  require_progress(psi, "inner diagram");

  const std::size_t n = phi.inner.size();
  const std::size_t m = psi.inner.size();
  const Layout lphi(phi.outer, phi.inner);
  const Layout lpsi(psi.outer, psi.inner);

  std::vector<SignedBox> inner(phi.inner.begin(), phi.inner.begin() + (i - 1));
  inner.insert(inner.end(), psi.inner.begin(), psi.inner.end());
  inner.insert(inner.end(), phi.inner.begin() + i, phi.inner.end());
  const Layout lres(phi.outer, inner);
  const auto res_dom = wd_domain(phi.outer, inner);
  const auto res_cod = wd_codomain(phi.outer, inner);

  auto phi_box_in_result = [&](std::size_t j) { return j < i ? j : j + m - 1; };

  // u- = v- (+) t^{not i}+ and u+ = t^{not i}- (+) v+, as indices into
  // phi's feet and into the result's feet.
  std::vector<std::size_t> u_minus = lphi.outer_minus_block();
  std::vector<std::size_t> u_minus_res = u_minus;
  std::vector<std::size_t> u_plus;
  std::vector<std::size_t> u_plus_res;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) {
      continue;
    }
    const std::size_t r = phi_box_in_result(j);
    for (std::size_t p = 0; p < phi.inner[j - 1].plus.size(); ++p) {
      u_minus.push_back(lphi.dom_index({j, p}));
      u_minus_res.push_back(lres.dom_index({r, p}));
    }
    for (std::size_t p = 0; p < phi.inner[j - 1].minus.size(); ++p) {
      u_plus.push_back(lphi.cod_index({j, p}));
      u_plus_res.push_back(lres.cod_index({r, p}));
    }
  }
  for (std::size_t p = 0; p < phi.outer.plus.size(); ++p) {
    u_plus.push_back(lphi.cod_index({0, p}));
    u_plus_res.push_back(lres.cod_index({0, p}));
  }
  const auto ti_minus = lphi.minus_block(i);
  const auto ti_plus = lphi.plus_block(i);

  // Psi's feet: t^i- (+) s+ and s- (+) t^i+.
  const auto psi_ti_minus = lpsi.outer_minus_block();
  const auto psi_ti_plus = lpsi.outer_plus_block();
  std::vector<std::size_t> s_plus;
  std::vector<std::size_t> s_plus_res;
  std::vector<std::size_t> s_minus;
  std::vector<std::size_t> s_minus_res;
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t r = i - 1 + k;
    for (std::size_t p = 0; p < psi.inner[k - 1].plus.size(); ++p) {
      s_plus.push_back(lpsi.dom_index({k, p}));
      s_plus_res.push_back(lres.dom_index({r, p}));
    }
    for (std::size_t p = 0; p < psi.inner[k - 1].minus.size(); ++p) {
      s_minus.push_back(lpsi.cod_index({k, p}));
      s_minus_res.push_back(lres.cod_index({r, p}));
    }
  }

  const SpanMatrix mphi = phi.matrix();
  const SpanMatrix mpsi = psi.matrix();
  const SpanMatrix phi_u_ti = component(mphi, u_minus, ti_minus);
  const SpanMatrix phi_ti_u = component(mphi, ti_plus, u_plus);

  const SpanMatrix upper_left =
      mat_mul(phi_u_ti, component(mpsi, psi_ti_minus, s_minus));
  const SpanMatrix untouched = component(mphi, u_minus, u_plus);
  const SpanMatrix upper_right = mat_add(
      untouched,
      mat_mul(mat_mul(phi_u_ti, component(mpsi, psi_ti_minus, psi_ti_plus)),
              phi_ti_u));
  const SpanMatrix lower_left = component(mpsi, s_plus, s_minus);
  const SpanMatrix lower_right =
      mat_mul(component(mpsi, s_plus, psi_ti_plus), phi_ti_u);

  SpanMatrix total = embed(upper_left, u_minus_res, s_minus_res, res_dom,
                           res_cod);
  total = mat_add(total, embed(upper_right, u_minus_res, u_plus_res, res_dom,
                               res_cod));
  total = mat_add(total, embed(lower_left, s_plus_res, s_minus_res, res_dom,
                               res_cod));
  total = mat_add(total, embed(lower_right, s_plus_res, u_plus_res, res_dom,
                               res_cod));

  // The four blocks occupy disjoint cells of the result, and each cell keeps
  // its block's wire order, so blocks can be read back by position.
  ComposeTrace trace;
  auto tag = [&](const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, FuseCase kind,
                 const SpanMatrix* split) {
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const auto& cell = total.at(rows[a], cols[b]);
        const std::size_t keep = split ? split->at(a, b).size() : 0;
        for (std::size_t k = 0; k < cell.size(); ++k) {
          trace.block_of[cell[k]] =
              k < keep ? FuseCase::untouched : kind;
        }
      }
    }
  };
  tag(u_minus_res, s_minus_res, FuseCase::incoming, nullptr);
  tag(u_minus_res, u_plus_res, FuseCase::passing, &untouched);
  tag(s_plus_res, s_minus_res, FuseCase::internal, nullptr);
  tag(s_plus_res, u_plus_res, FuseCase::outgoing, nullptr);

  Span span = matrix_to_span(total);
  trace.result = {std::move(inner), phi.outer, std::move(span)};
  require_progress(trace.result, "composite");
  return trace;
}

WiringDiagramSpan compose_formula(const WiringDiagramSpan& psi, std::size_t i,
                                  const WiringDiagramSpan& phi) {
  return compose_formula_traced(psi, i, phi).result;
}

WiringDiagramSpan permute_inner(const WiringDiagramSpan& ws,
                                std::span<const std::size_t> order) {
  const std::size_t n = ws.inner.size();
  std::vector<std::size_t> new_pos(n, n);
  if (order.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange, "box order has the wrong length");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || new_pos[order[k]] != n) {
      throw Error(ErrorKind::IndexOutOfRange, "box order is not a bijection");
    }
    new_pos[order[k]] = k;
  }
  std::vector<SignedBox> inner;
  inner.reserve(n);
  for (std::size_t k : order) {
    inner.push_back(ws.inner[k]);
  }
  const Layout old_layout(ws.outer, ws.inner);
  const Layout new_layout(ws.outer, inner);
  auto move_box = [&](PortAddr a) {
    return a.box == 0 ? a : PortAddr{new_pos[a.box - 1] + 1, a.port};
  };
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t w = 0; w < ws.span.apex.size(); ++w) {
    ends.emplace_back(
        new_layout.dom_index(move_box(old_layout.dom_addr(ws.span.src_leg[w]))),
        new_layout.cod_index(
            move_box(old_layout.cod_addr(ws.span.tgt_leg[w]))));
  }
  return make_wd_span(ws.outer, std::move(inner), ws.span.apex.elements(),
                      ends);
}

bool span_iso(const WiringDiagramSpan& a, const WiringDiagramSpan& b) {
  return a.outer == b.outer && a.inner == b.inner && span_iso(a.span, b.span);
}

// Generators ---------------------------------------------------------------

namespace {

void require_count(const std::vector<std::string>& names, std::size_t n,
                   std::string_view block) {
  if (names.size() != n) {
    throw Error(ErrorKind::TypeMismatch,
                std::string(block) + " block needs " + std::to_string(n) +
                    " wire names, got " + std::to_string(names.size()));
  }
}

}  // namespace

WiringDiagramSpan seq_gen(const TypeList& a, const TypeList& b,
                          const TypeList& c,
                          const std::vector<std::string>& names_a,
                          const std::vector<std::string>& names_b,
                          const std::vector<std::string>& names_c) {
  require_count(names_a, a.size(), "A");
  require_count(names_b, b.size(), "B");
  require_count(names_c, c.size(), "C");
  SignedBox outer = SignedBox::from_lists(a, c);
  std::vector<SignedBox> inner{SignedBox::from_lists(a, b),
                               SignedBox::from_lists(b, c)};
  const Layout layout(outer, inner);
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t p = 0; p < a.size(); ++p) {
    names.push_back(names_a[p]);
    ends.emplace_back(layout.dom_index({0, p}), layout.cod_index({1, p}));
  }
  for (std::size_t p = 0; p < b.size(); ++p) {
    names.push_back(names_b[p]);
    ends.emplace_back(layout.dom_index({1, p}), layout.cod_index({2, p}));
  }
  for (std::size_t p = 0; p < c.size(); ++p) {
    names.push_back(names_c[p]);
    ends.emplace_back(layout.dom_index({2, p}), layout.cod_index({0, p}));
  }
  return make_wd_span(std::move(outer), std::move(inner), std::move(names),
                      ends);
}

WiringDiagramSpan para_gen(const TypeList& t_in, const TypeList& t_out,
                           const TypeList& u_in, const TypeList& u_out,
                           const std::vector<std::string>& names_a,
                           const std::vector<std::string>& names_a2,
                           const std::vector<std::string>& names_b,
                           const std::vector<std::string>& names_b2) {
  require_count(names_a, t_in.size(), "A");
  require_count(names_a2, u_in.size(), "A'");
  require_count(names_b, t_out.size(), "B");
  require_count(names_b2, u_out.size(), "B'");
  TypeList outer_in = t_in;
  outer_in.insert(outer_in.end(), u_in.begin(), u_in.end());
  TypeList outer_out = t_out;
  outer_out.insert(outer_out.end(), u_out.begin(), u_out.end());
  SignedBox outer = SignedBox::from_lists(outer_in, outer_out);
  std::vector<SignedBox> inner{SignedBox::from_lists(t_in, t_out),
                               SignedBox::from_lists(u_in, u_out)};
  const Layout layout(outer, inner);
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t p = 0; p < t_in.size(); ++p) {
    names.push_back(names_a[p]);
    ends.emplace_back(layout.dom_index({0, p}), layout.cod_index({1, p}));
  }
  for (std::size_t p = 0; p < u_in.size(); ++p) {
    names.push_back(names_a2[p]);
    ends.emplace_back(layout.dom_index({0, t_in.size() + p}),
                      layout.cod_index({2, p}));
  }
  for (std::size_t p = 0; p < t_out.size(); ++p) {
    names.push_back(names_b[p]);
    ends.emplace_back(layout.dom_index({1, p}), layout.cod_index({0, p}));
  }
  for (std::size_t p = 0; p < u_out.size(); ++p) {
    names.push_back(names_b2[p]);
    ends.emplace_back(layout.dom_index({2, p}),
                      layout.cod_index({0, t_out.size() + p}));
  }
  return make_wd_span(std::move(outer), std::move(inner), std::move(names),
                      ends);
}

WiringDiagramSpan sym_gen(const TypeList& types, std::span<const int> sigma,
                          const std::vector<std::string>& names) {
  const std::size_t n = types.size();
  require_count(names, n, "symmetry");
  if (sigma.size() != n) {
    throw Error(ErrorKind::TypeMismatch, "permutation length mismatch");
  }
  std::vector<bool> hit(n, false);
  for (int s : sigma) {
    if (s < 1 || static_cast<std::size_t>(s) > n || hit[s - 1]) {
      throw Error(ErrorKind::BadPermutation,
                  "not a permutation of 1.." + std::to_string(n));
    }
    hit[s - 1] = true;
  }
  TypeList out = types;
  for (std::size_t k = 0; k < n; ++k) {
    out[sigma[k] - 1] = types[k];
  }
  SignedBox outer = SignedBox::from_lists(types, out);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t k = 0; k < n; ++k) {
    ends.emplace_back(k, static_cast<std::size_t>(sigma[k] - 1));
  }
  return make_wd_span(std::move(outer), {}, names, ends);
}

}  // namespace wdalg
