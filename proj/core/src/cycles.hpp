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

#ifndef WDALG_SRC_CYCLES_HPP_
#define WDALG_SRC_CYCLES_HPP_

#include <vector>

namespace wdalg::detail {

// Shortest directed cycle in a graph on 0..n-1 given by sorted adjacency
// lists. The result starts at the smallest vertex that lies on a shortest
// cycle; empty when the graph is acyclic.
std::vector<int> shortest_cycle(const std::vector<std::vector<int>>& adj);

// Transitive closure reach[u][v] (u reaches v by a path of length >= 1).
std::vector<std::vector<bool>> transitive_closure(
    const std::vector<std::vector<int>>& adj);

}  // namespace wdalg::detail

#endif  // WDALG_SRC_CYCLES_HPP_
