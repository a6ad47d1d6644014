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

#include "cycles.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>

namespace wdalg::detail {

std::vector<int> shortest_cycle(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> parent(n, -1);
    std::vector<int> dist(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      const int u = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) {
        break;
      }
      for (int v : adj[u]) {
        if (v == s) {
          closing = u;
          break;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (closing < 0) {
      continue;
    }
    std::vector<int> cycle;
    for (int v = closing; v != s; v = parent[v]) {
      cycle.push_back(v);
    }
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) {
      best = std::move(cycle);
    }
  }
  return best;
}

std::vector<std::vector<bool>> transitive_closure(
    const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> stack(adj[s].begin(), adj[s].end());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (reach[s][v]) {
        continue;
      }
      reach[s][v] = true;
      for (int w : adj[v]) {
        if (!reach[s][w]) {
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace wdalg::detail
