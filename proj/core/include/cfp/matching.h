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

#ifndef CFP_MATCHING_H_
#define CFP_MATCHING_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cfp/graph.h"

namespace cfp {

// A cycle of a 2-factor. edges[i] joins vertices[i] and vertices[i + 1]
// (cyclically). Length-2 cycles consist of a parallel pair.
struct FactorCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t size() const { return edges.size(); }
};

struct TwoFactor {
  std::vector<FactorCycle> cycles;
  std::vector<EdgeId> complement;  // A perfect matching, ascending.
};

// Visits perfect matchings of h that avoid `forbidden`, in a fixed
// deterministic order, until `visit` returns false or `limit` matchings have
// been produced. Each matching is passed as ascending edge ids. Returns the
// number visited.
std::size_t ForEachPerfectMatching(
    const MultiGraph& h, std::span<const EdgeId> forbidden,
    const std::function<bool(const std::vector<EdgeId>&)>& visit,
    std::size_t limit = static_cast<std::size_t>(-1));

// First perfect matching in ForEachPerfectMatching order, or nullopt.
std::optional<std::vector<EdgeId>> PerfectMatchingAvoiding(
    const MultiGraph& h, std::span<const EdgeId> forbidden);

// Splits h into the cycles of E(h) - matching. Cycles start at the smallest
// unvisited vertex and first step toward its smaller neighbor (smaller edge
// id for a parallel pair). Throws Error(kPlesnikViolated) when the
// complement is not 2-regular.
TwoFactor TwoFactorFromMatching(const MultiGraph& h,
                                const std::vector<EdgeId>& matching);

// A 2-factor whose cycles contain every required edge. For a 2-edge-connected
// cubic multigraph and at most two required edges one always exists; failure
// throws Error(kPlesnikViolated).
TwoFactor TwoFactorContaining(const MultiGraph& h,
                              std::span<const EdgeId> required);

}  // namespace cfp

#endif  // CFP_MATCHING_H_
