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

#include "wdalg/oracle.hpp"

#include <algorithm>

namespace wdalg {

std::vector<std::size_t> substitution_box_order(std::size_t host_boxes,
                                                std::size_t i,
                                                std::size_t sub_boxes) {
  std::vector<std::size_t> order;
  for (std::size_t j = 1; j <= host_boxes; ++j) {
    if (j < i) {
      order.push_back(j - 1);
    } else if (j > i) {
      order.push_back(j - 2 + sub_boxes);
    }
  }
  for (std::size_t k = 0; k < sub_boxes; ++k) {
    order.push_back(i - 1 + k);
  }
  return order;
}

namespace {

std::string path_name(const std::vector<WireOrigin>& path) {
  std::string name;
  for (const auto& o : path) {
    const std::string part =
        (o.diagram == 0 ? "h" : "s") + std::to_string(o.wire + 1);
    name = name.empty() ? part : pair_wire_name(name, part);
  }
  return name;
}

}  // namespace

OracleReport cross_check(const WiringDiagram& host, int i,
                         const WiringDiagram& sub) {
  if (i < 1 || i > static_cast<int>(host.box_count())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "no inner box " + std::to_string(i));
  }
  const int target = i + kFirstBoxId - 1;
  const auto traced = substitute_traced(host, {{target, sub}});

  OracleReport report;
  report.via_substitution = wd_to_span(traced.diagram);
  const auto trace =
      compose_formula_traced(wd_to_span(sub, "s"), static_cast<std::size_t>(i),
                             wd_to_span(host, "h"));
  const auto order = substitution_box_order(host.box_count(),
                                            static_cast<std::size_t>(i),
                                            sub.box_count());
  report.via_formula = permute_inner(trace.result, order);
  report.span_iso = span_iso(report.via_substitution, report.via_formula);

  std::vector<std::string> from_sub;
  for (const auto& p : traced.provenance) {
    from_sub.push_back(std::string(to_string(p.kind)) + " " +
                       path_name(p.path));
  }
  std::vector<std::string> from_formula;
  for (const auto& [name, kind] : trace.block_of) {
    from_formula.push_back(std::string(to_string(kind)) + " " + name);
  }
  std::sort(from_sub.begin(), from_sub.end());
  std::sort(from_formula.begin(), from_formula.end());
  std::vector<std::string> only;
  std::set_difference(from_sub.begin(), from_sub.end(), from_formula.begin(),
                      from_formula.end(), std::back_inserter(only));
  for (auto& s : only) {
    report.mismatches.push_back("sub: " + s);
  }
  only.clear();
  std::set_difference(from_formula.begin(), from_formula.end(),
                      from_sub.begin(), from_sub.end(),
                      std::back_inserter(only));
  for (auto& s : only) {
    report.mismatches.push_back("formula: " + s);
  }
  report.cases_agree = report.mismatches.empty();
  return report;
}

}  // namespace wdalg
