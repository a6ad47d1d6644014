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

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "support/fixtures.hpp"
#include "support/random_diagrams.hpp"
#include "wdalg/equality.hpp"
#include "wdalg/expr.hpp"
#include "wdalg/operad.hpp"
#include "wdalg/oracle.hpp"
#include "wdalg/serialize.hpp"
#include "wdalg/smc.hpp"
#include "wdalg/span.hpp"

using namespace wdalg;
namespace ex = wdalg::expr;
namespace wt = wdalg::testing;

namespace {

using Cells = std::vector<std::vector<SpanMatrix::WireSet>>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

TypedFiniteSet basis(std::vector<std::string> names) {
  return TypedFiniteSet(names, TypeList(names.size(), PortType("o")));
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// 1 ------------------------------------------------------------------------
Outcome golden_product() {
  const auto a = make_matrix(basis({"j", "k"}), basis({"r", "s", "t"}),
                             Cells{{{}, {"N"}, {"L", "M"}},
                                   {{"O", "P"}, {}, {"Q"}}});
  const auto b = make_matrix(basis({"r", "s", "t"}), basis({"x", "y", "z"}),
                             Cells{{{"F", "G"}, {"B"}, {}},
                                   {{}, {}, {"A", "D"}},
                                   {{"C"}, {}, {"E"}}});
  const auto p = mat_mul(a, b);
  const Cells expect{
      {{"(L,C)", "(M,C)"}, {}, {"(L,E)", "(M,E)", "(N,A)", "(N,D)"}},
      {{"(O,F)", "(O,G)", "(P,F)", "(P,G)", "(Q,C)"},
       {"(O,B)", "(P,B)"},
       {"(Q,E)"}}};
  Outcome out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (sorted(p.at(i, j)) != expect[i][j]) {
        out.ok = false;
        out.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") differs";
      }
    }
  }
  return out;
}

// 2 ------------------------------------------------------------------------
Outcome interchange_square() {
  const auto x = make_types({"x"});
  const auto xx = make_types({"x", "x"});
  const auto para_eta =
      para_gen(x, x, x, x, {"A1-"}, {"A2-"}, {"C1+"}, {"C2+"});
  const auto seq_w1 = seq_gen(x, x, x, {"A1+"}, {"B1"}, {"C1-"});
  const auto seq_w2 = seq_gen(x, x, x, {"A2+"}, {"B2"}, {"C2-"});
  const std::vector<std::size_t> order{0, 2, 1, 3};
  const auto route1 = permute_inner(
      compose_formula(seq_w2, 3, compose_formula(seq_w1, 1, para_eta)),
      order);
  const auto seq_w = seq_gen(xx, xx, xx, {"A1-", "A2-"}, {"B1_0", "B2_0"},
                             {"C1+", "C2+"});
  const auto para1 =
      para_gen(x, x, x, x, {"A1+"}, {"A2+"}, {"B1-"}, {"B2-"});
  const auto para2 =
      para_gen(x, x, x, x, {"B1+"}, {"B2+"}, {"C1-"}, {"C2-"});
  const auto route2 =
      compose_formula(para2, 3, compose_formula(para1, 1, seq_w));

  auto diagonal = [](std::vector<std::string> d) {
    Cells c(6, std::vector<SpanMatrix::WireSet>(6));
    for (std::size_t k = 0; k < 6; ++k) {
      c[k][k] = {d[k]};
    }
    return c;
  };
  const auto m1 = route1.matrix();
  const auto m2 = route2.matrix();
  Outcome out;
  if (m1 != make_matrix(m1.rows(), m1.cols(),
                        diagonal({"(A1-,A1+)", "(A2-,A2+)", "B1", "B2",
                                  "(C1-,C1+)", "(C2-,C2+)"}))) {
    out = {false, "series-into-parallel matrix differs"};
  } else if (m2 != make_matrix(m2.rows(), m2.cols(),
                               diagonal({"(A1-,A1+)", "(A2-,A2+)",
                                         "(B1-,B1_0,B1+)", "(B2-,B2_0,B2+)",
                                         "(C1-,C1+)", "(C2-,C2+)"}))) {
    out = {false, "parallel-into-series matrix differs"};
  } else if (!span_iso(route1, route2)) {
    out = {false, "routes not span-isomorphic"};
  }
  return out;
}

// 3 ------------------------------------------------------------------------
Outcome cross_engine() {
  wt::Rng rng(3003);
  wt::DiagramShape host{5, 3, 4, 3};
  wt::DiagramShape sub{4, 3, 4, 3};
  const int pairs = 500;
  int failures = 0;
  int case_failures = 0;
  for (int k = 0; k < pairs; ++k) {
    const auto nest = wt::random_nest(rng, host, sub);
    const auto report = cross_check(nest.host, nest.box, nest.sub);
    failures += report.span_iso ? 0 : 1;
    case_failures += report.cases_agree ? 0 : 1;
  }
  return {failures == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(failures) +
              " not span-isomorphic, " + std::to_string(case_failures) +
              " with differing wire cases"};
}

// 4 ------------------------------------------------------------------------
Outcome progress() {
  Outcome out;
  const auto report = validate(wt::two_box_loop(), Mode::general);
  if (report.ok() || report.cycle.size() != 2) {
    return {false, "validate accepted the loop or gave a bad cycle"};
  }
  const auto x = make_types({"x"});
  const auto loop = make_wd_span(
      SignedBox::from_lists({}, {}),
      {SignedBox::from_lists(x, x), SignedBox::from_lists(x, x)}, {"A", "B"},
      {{0, 1}, {1, 0}});
  const auto order = progress_order(loop);
  if (!std::holds_alternative<CycleError>(order) ||
      std::get<CycleError>(order).witness.size() != 2) {
    return {false, "progress_order accepted the loop"};
  }
  const auto xy = make_types({"x", "y"});
  const std::vector<int> swap{2, 1};
  const std::vector<WiringDiagramSpan> generators{
      seq_gen(x, x, x, {"A"}, {"B"}, {"C"}),
      para_gen(x, x, x, x, {"A"}, {"A'"}, {"B"}, {"B'"}),
      sym_gen(xy, swap, {"A", "B"})};
  for (const auto& g : generators) {
    if (!std::holds_alternative<PartialOrder>(progress_order(g))) {
      return {false, "a generator was rejected"};
    }
    const std::vector<std::string> labels(g.inner.size(), "t");
    if (!validate(span_to_wd(g, labels), Mode::strict).ok()) {
      return {false, "a generator diagram failed validation"};
    }
  }
  out.detail = "loop witness of length 2; 3 generators accepted";
  return out;
}

// 5 ------------------------------------------------------------------------
Outcome operad_laws() {
  wt::Rng rng(5005);
  wt::DiagramShape host;
  wt::DiagramShape sub{4, 3, 4, 3};
  int nests = 0;
  int failures = 0;
  auto at = [](const WiringDiagram& d, int i, const WiringDiagram& s) {
    return substitute(d, {{i + 2, s}});
  };
  while (nests < 200) {
    const auto nest = wt::random_nest(rng, host, sub);
    if (nest.sub.box_count() == 0) {
      continue;
    }
    const auto& d = nest.host;
    const int id = nest.box + 2;
    failures += is_equal(substitute(d, {{id, inert(d.box(id))}}), d) ? 0 : 1;
    failures += is_equal(at(inert(d.input_types(), d.output_types()), 1, d), d)
                    ? 0
                    : 1;
    std::uniform_int_distribution<int> pick(
        1, static_cast<int>(nest.sub.box_count()));
    const int j = pick(rng);
    const Box& b = nest.sub.box(j + 2);
    const auto inner = wt::random_strict_diagram(rng, b.inputs, b.outputs, sub);
    const int shifted = static_cast<int>(d.box_count()) - 1 + j;
    failures += is_equal(at(at(d, nest.box, nest.sub), shifted, inner),
                         at(d, nest.box, at(nest.sub, j, inner)))
                    ? 0
                    : 1;
    ++nests;
  }
  return {failures == 0, std::to_string(nests) + " nests, " +
                             std::to_string(failures) + " failures"};
}

// 6 ------------------------------------------------------------------------
Outcome smc_axioms() {
  wt::Rng rng(6006);
  const TypeList palette = wt::type_palette(3);
  auto types = [&] { return wt::random_types(rng, palette, 3); };
  const int instances = 100;
  std::vector<std::pair<std::string, int>> failed{
      {"interchange", 0},     {"seq assoc", 0},   {"seq unit", 0},
      {"tensor assoc", 0},    {"tensor unit", 0}, {"unit object", 0},
      {"braid involution", 0}, {"braid naturality", 0}};

  for (int n = 0; n < instances; ++n) {
    // interchange, parsed from source with random typings
    {
      const auto a = types();
      const auto b = types();
      const auto c = types();
      const auto d = types();
      const auto e = types();
      const auto g = types();
      std::string src = "ob";
      for (const auto& t : palette) src += " " + t.name();
      src += "\nhom f : " + ex::print(a) + " -> " + ex::print(b) +
             "\nhom g : " + ex::print(b) + " -> " + ex::print(c) +
             "\nhom h : " + ex::print(d) + " -> " + ex::print(e) +
             "\nhom k : " + ex::print(e) + " -> " + ex::print(g) +
             "\nterm lhs = (f;g)*(h;k)\nterm rhs = (f*h);(g*k)\n";
      const auto p = ex::parse(src);
      if (!is_equal(ex::compile(*p.term("lhs").expr, p.signature).diagram(),
                    ex::compile(*p.term("rhs").expr, p.signature).diagram())) {
        ++failed[0].second;
      }
    }
    auto sig = wt::signature_over(palette);
    const auto a = types();
    const auto b = types();
    const auto c = types();
    const auto d = types();
    const auto f = wt::random_expr(rng, sig, a, b, 2, palette);
    const auto g = wt::random_expr(rng, sig, b, c, 2, palette);
    const auto h = wt::random_expr(rng, sig, c, d, 2, palette);
    auto eq = [&](const ex::ExprPtr& x, const ex::ExprPtr& y) {
      return is_equal(ex::compile(*x, sig).diagram(),
                      ex::compile(*y, sig).diagram());
    };
    auto tally = [&](std::size_t i, bool ok) { failed[i].second += ok ? 0 : 1; };
    tally(1, eq(ex::seq(ex::seq(f, g), h), ex::seq(f, ex::seq(g, h))));
    tally(2, eq(ex::seq(ex::identity(a), f), f) &&
                 eq(ex::seq(f, ex::identity(b)), f));
    tally(3, eq(ex::tensor(ex::tensor(f, g), h),
                ex::tensor(f, ex::tensor(g, h))));
    tally(4, eq(ex::tensor(ex::identity({}), f), f) &&
                 eq(ex::tensor(f, ex::identity({})), f));
    tally(5, eq(ex::tensor(f, ex::unit()), f) &&
                 eq(ex::tensor(ex::unit(), f), f));
    tally(6, eq(ex::seq(ex::braid(a, c), ex::braid(c, a)),
                ex::identity(ex::typecheck(*ex::tensor(f, h), sig).dom)));
    // naturality on fresh generators
    sig.add_generator("nat_u" + std::to_string(n), {a, b});
    sig.add_generator("nat_v" + std::to_string(n), {c, d});
    const auto u = ex::gen("nat_u" + std::to_string(n));
    const auto v = ex::gen("nat_v" + std::to_string(n));
    tally(7, eq(ex::seq(ex::tensor(u, v), ex::braid(b, d)),
                ex::seq(ex::braid(a, c), ex::tensor(v, u))));
  }
  Outcome out;
  out.detail = std::to_string(instances) + " instances per axiom";
  for (const auto& [name, count] : failed) {
    if (count != 0) {
      out.ok = false;
      out.detail += "; " + name + " failed " + std::to_string(count);
    }
  }
  return out;
}

// 7 ------------------------------------------------------------------------
std::string power(const std::string& term, int n, const std::string& unit) {
  if (n == 0) {
    return unit;
  }
  std::string s = term;
  for (int k = 1; k < n; ++k) s += " ; " + term;
  return s;
}

std::vector<std::pair<std::string, std::string>> inequivalent_pairs() {
  std::vector<std::pair<std::string, std::string>> pairs;
  // label swaps in series and in parallel
  for (int n = 2; n <= 11; ++n) {
    std::string lhs;
    std::string rhs;
    for (int k = 0; k < n; ++k) {
      const std::string l = k % 2 == 0 ? "a" : "b";
      const std::string r = k == 0 ? "b" : (k == 1 ? "a" : l);
      lhs += (k ? " ; " : "") + l;
      rhs += (k ? " ; " : "") + r;
    }
    pairs.emplace_back(lhs, rhs);
    std::string tl = lhs;
    std::string tr = rhs;
    std::replace(tl.begin(), tl.end(), ';', '*');
    std::replace(tr.begin(), tr.end(), ';', '*');
    pairs.emplace_back(tl, tr);
  }
  // port permutations around a single three-port box
  const std::vector<std::string> perms{"1 3 2", "2 1 3", "2 3 1", "3 1 2",
                                       "3 2 1"};
  for (const auto& s : perms) {
    pairs.emplace_back("m", "perm[x*x*x | " + s + "] ; m");
    pairs.emplace_back("m", "m ; perm[x*x*x | " + s + "]");
  }
  // rewirings between a splitter and a merger
  for (const auto& s : perms) {
    pairs.emplace_back("(p * id[x]) ; (id[x] * q)",
                       "(p * id[x]) ; perm[x*x*x | " + s + "] ; (id[x] * q)");
  }
  for (const auto& s : perms) {
    pairs.emplace_back("(id[x] * p) ; (q * id[x])",
                       "(id[x] * p) ; perm[x*x*x | " + s + "] ; (q * id[x])");
  }
  // same boxes, different branch lengths
  const std::vector<std::array<int, 3>> splits{
      {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 2, 0},
      {2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 0, 2}, {0, 1, 2}};
  auto branch = [&](const std::array<int, 3>& s) {
    return "p ; ((" + power("c", s[0], "id[x]") + ") * (" +
           power("c", s[1], "id[x]") + ")) ; q ; " +
           power("c", s[2], "id[x]");
  };
  for (std::size_t k = 0; k < splits.size(); ++k) {
    pairs.emplace_back(branch(splits[k]),
                       branch(splits[(k + 1) % splits.size()]));
  }
  return pairs;
}

Outcome discrimination() {
  const std::string header =
      "ob x\nhom a : x -> x\nhom b : x -> x\nhom c : x -> x\n"
      "hom m : x*x*x -> x*x*x\nhom p : x -> x*x\nhom q : x*x -> x\n";
  const auto pairs = inequivalent_pairs();
  int wrong = 0;
  std::string first;
  for (const auto& [l, r] : pairs) {
    const auto prog = ex::parse(header + "term l = " + l + "\nterm r = " + r +
                                "\n");
    const auto dl = ex::compile(*prog.term("l").expr, prog.signature);
    const auto dr = ex::compile(*prog.term("r").expr, prog.signature);
    if (is_equal(dl.diagram(), dr.diagram())) {
      ++wrong;
      if (first.empty()) first = l + "  vs  " + r;
    }
  }
  Outcome out{wrong == 0, std::to_string(pairs.size()) + " pairs, " +
                              std::to_string(wrong) + " judged equal"};
  if (pairs.size() < 50) {
    out.ok = false;
  }
  if (!first.empty()) out.detail += " (first: " + first + ")";
  return out;
}

// 8 ------------------------------------------------------------------------
Outcome golden_json() {
  static const std::string frozen =
      R"({"inputs":["x"],"outputs":["z"],"boxes":[)"
      R"({"id":3,"value":"f","inputs":["x"],"outputs":["y"]},)"
      R"({"id":4,"value":"g","inputs":["y"],"outputs":["z"]}],)"
      R"("wires":[{"src":[1,1],"tgt":[3,1]},{"src":[3,1],"tgt":[4,1]},)"
      R"({"src":[4,1],"tgt":[2,1]}]})";
  const auto prog = ex::parse(
      "ob x y z\nhom f : x -> y\nhom g : y -> z\nterm fg = f ; g\n");
  const auto m = ex::compile(*prog.term("fg").expr, prog.signature);
  const auto got = canonical_json(m.diagram());
  return {got == frozen, got == frozen ? "" : "got " + got};
}

struct Criterion {
  int number;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden matrix product", 1.0, golden_product},
      {2, "interchange square of generator spans", 10.0, interchange_square},
      {3, "substitution vs block formula", 60000.0, cross_engine},
      {4, "progress condition", 1.0, progress},
      {5, "operad unit and associativity laws", 30000.0, operad_laws},
      {6, "monoidal axioms on compiled expressions", 60000.0, smc_axioms},
      {7, "inequivalent pairs are told apart", 10000.0, discrimination},
      {8, "golden canonical JSON of f;g", 1.0, golden_json},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    if (ms > c.limit_ms) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ") +
                    std::string("over time limit");
    }
    failed += out.ok ? 0 : 1;
    std::printf("%s criterion %d: %s [%.3f ms, limit %.0f ms]%s%s\n",
                out.ok ? "PASS" : "FAIL", c.number, c.name, ms, c.limit_ms,
                out.detail.empty() ? "" : " ", out.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
