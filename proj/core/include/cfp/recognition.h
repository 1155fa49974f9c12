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

#ifndef CFP_RECOGNITION_H_
#define CFP_RECOGNITION_H_

#include <array>
#include <optional>
#include <vector>

#include "cfp/graph.h"

namespace cfp {

// An induced K_{1,3}: `center` is adjacent to all leaves, and no two leaves
// are adjacent.
struct ClawWitness {
  VertexId center;
  std::array<VertexId, 3> leaves;
};

// Cut edges, ascending by id.
using BridgeSet = std::vector<EdgeId>;

bool IsCubic(const MultiGraph& g);

// First claw in (center, leaves) lexicographic order, or nullopt when g is
// claw-free. Leaves are distinct vertices, so parallel edges never form a
// claw on their own.
std::optional<ClawWitness> FindClaw(const MultiGraph& g);

// Lowpoint DFS keyed on edge ids; a parallel pair is never a bridge.
BridgeSet FindBridges(const MultiGraph& g);

// Connected, at least two vertices, no bridges.
bool IsTwoEdgeConnected(const MultiGraph& g);

}  // namespace cfp

#endif  // CFP_RECOGNITION_H_
