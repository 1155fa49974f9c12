// Copyright 2026 The cfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfp/recognition.h"

#include <algorithm>

namespace cfp {

bool IsCubic(const MultiGraph& g) {
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&g](VertexId v) { return g.Degree(v) == 3; });
}

std::optional<ClawWitness> FindClaw(const MultiGraph& g) {
  for (VertexId v : g.vertices()) {
    const auto nbrs = g.Neighbors(v);
    const std::size_t k = nbrs.size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (g.Adjacent(nbrs[a], nbrs[b])) continue;
        for (std::size_t c = b + 1; c < k; ++c) {
          if (!g.Adjacent(nbrs[a], nbrs[c]) && !g.Adjacent(nbrs[b], nbrs[c])) {
            return ClawWitness{v, {nbrs[a], nbrs[b], nbrs[c]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

BridgeSet FindBridges(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  BridgeSet bridges;
  int counter = 0;

  struct Frame {
    int vertex;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{static_cast<int>(root), EdgeId{}, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const VertexId v = g.vertices()[top.vertex];
      const auto inc = g.incident(v);
      if (top.next < inc.size()) {
        const EdgeId e = inc[top.next++];
        if (e == top.parent_edge) continue;
        const int w = g.VertexIndex(g.edge(e).Other(v));
        if (order[w] < 0) {
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else {
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) bridges.push_back(done.parent_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool IsTwoEdgeConnected(const MultiGraph& g) {
  return g.num_vertices() >= 2 && IsConnected(g) && FindBridges(g).empty();
}

}  // namespace cfp
