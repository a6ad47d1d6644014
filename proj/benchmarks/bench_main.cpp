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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "support/random_diagrams.hpp"
#include "wdalg/equality.hpp"
#include "wdalg/expr.hpp"
#include "wdalg/operad.hpp"
#include "wdalg/span.hpp"

using namespace wdalg;
namespace wt = wdalg::testing;

namespace {

std::vector<wt::Nest> nests(int count, int boxes) {
  wt::Rng rng(77);
  wt::DiagramShape shape{boxes, 3, 4, 3};
  std::vector<wt::Nest> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(wt::random_nest(rng, shape, shape));
  }
  return out;
}

void BM_Substitute(benchmark::State& state) {
  const auto ns = nests(64, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& n = ns[k++ % ns.size()];
    benchmark::DoNotOptimize(substitute(n.host, {{n.box + 2, n.sub}}));
  }
}
BENCHMARK(BM_Substitute)->Arg(5)->Arg(20)->Arg(80);

void BM_ComposeFormula(benchmark::State& state) {
  const auto ns = nests(64, static_cast<int>(state.range(0)));
  std::vector<std::pair<WiringDiagramSpan, WiringDiagramSpan>> spans;
  for (const auto& n : ns) {
    spans.emplace_back(wd_to_span(n.host, "h"), wd_to_span(n.sub, "s"));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const std::size_t i = k % ns.size();
    benchmark::DoNotOptimize(compose_formula(
        spans[i].second, static_cast<std::size_t>(ns[i].box), spans[i].first));
    ++k;
  }
}
BENCHMARK(BM_ComposeFormula)->Arg(5)->Arg(20)->Arg(80);

void BM_IsEqual(benchmark::State& state) {
  wt::Rng rng(78);
  wt::DiagramShape shape{static_cast<int>(state.range(0)), 3, 4, 3};
  std::vector<std::pair<WiringDiagram, WiringDiagram>> pairs;
  for (int k = 0; k < 32; ++k) {
    auto d = wt::random_strict_diagram(rng, shape);
    auto e = wt::shuffled_copy(rng, d);
    pairs.emplace_back(std::move(d), std::move(e));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(is_equal(a, b));
  }
}
BENCHMARK(BM_IsEqual)->Arg(5)->Arg(20)->Arg(80);

void BM_Canonicalize(benchmark::State& state) {
  wt::Rng rng(79);
  wt::DiagramShape shape{static_cast<int>(state.range(0)), 3, 4, 3};
  std::vector<WiringDiagram> ds;
  for (int k = 0; k < 32; ++k) {
    ds.push_back(wt::random_strict_diagram(rng, shape));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(ds[k++ % ds.size()]));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(5)->Arg(20)->Arg(80);

void BM_ParseCompile(benchmark::State& state) {
  std::string src = "ob x y\nhom f : x -> x*y\nhom g : x*y -> x\n";
  std::string body = "f ; g";
  for (int k = 1; k < state.range(0); ++k) {
    body = "(" + body + ") * (f ; g)";
  }
  src += "term t = " + body + "\n";
  for (auto _ : state) {
    const auto prog = expr::parse(src);
    benchmark::DoNotOptimize(
        expr::compile(*prog.term("t").expr, prog.signature));
  }
}
BENCHMARK(BM_ParseCompile)->Arg(1)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
