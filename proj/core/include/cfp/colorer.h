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

#ifndef CFP_COLORER_H_
#define CFP_COLORER_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfp/coloring.h"
#include "cfp/graph.h"
#include "cfp/matching.h"
#include "cfp/structure.h"

namespace cfp {

// Counters collected while coloring. A backtrack is any constructed candidate
// that the verifier rejected before a later candidate was accepted.
struct ColorerDiagnostics {
  int backtracks = 0;
  std::string variant;  // "K4", "RingOfDiamonds", "Substituted", "Bridged".
  int components = 1;
};

// The three perfect matchings of K4 get 1a, 1b, 1c in order of their
// smallest edge id. Throws Error(kNotK4).
EdgeColoring ColorK4(const MultiGraph& g);

// External matchings 1a and 1b, internal edges and ring connectors 1c.
// Throws Error(kNotRing) unless g is a ring of exactly k diamonds.
EdgeColoring ColorRing(const MultiGraph& g, int k);

// One cycle x_1 h_1 y_1 x_2 ... of a 2-factor of H, expanded into G. Slot
// 3j is x_j h_j, slot 3j+1 is h_j y_j and slot 3j+2 is the connector from
// y_j to x_{j+1}.
struct CycleSlot {
  VertexId from;
  VertexId to;
  std::optional<EdgeId> edge;    // Unset for a connector realized by a string.
  std::optional<EdgeId> h_edge;  // Connector slots only.
};

struct ExpandedCycle {
  std::vector<CycleSlot> slots;
  // Connector slot with the smallest edge id (first connector for strings).
  int canonical_connector = 2;

  int m() const { return static_cast<int>(slots.size()) / 3; }
};

ExpandedCycle ExpandCycle(const OumDecomposition& d, const FactorCycle& cycle);

struct CycleChoice {
  // Odd cycles: the connector slot colored 3a; -1 picks the canonical one.
  int three_a_slot = -1;
  // Even cycles: 1b instead of 1a at the canonical connector. Odd cycles:
  // the alternation after the 3a slot starts with 1b.
  bool flip = false;
};

// One color per slot: even cycles alternate 1a/1b, odd cycles put 3a on one
// connector and alternate along the remaining path. Throws Error(kBadAnchor)
// if the 3a slot is not a connector slot.
std::vector<PackingColor> ColorCycle(const ExpandedCycle& cycle,
                                     const CycleChoice& choice);

enum class StringType { kType1, kType2_1, kType2_2, kType2_3 };
enum class StringEnd { kLeft, kRight };

struct StringContext {
  StringType type = StringType::kType1;
  // kType2_3 only: which end connector takes 3a, and the color (1a or 1b)
  // of the internal edges and remaining connectors.
  StringEnd three_a_end = StringEnd::kLeft;
  PackingColor fill = PackingColor::k1a;
};

// Type 1: externals 1a/1b, internal edges and connectors 1c. Type 2.1:
// externals 1b/1c, the rest 1a. Type 2.2: externals 1a/1c, the rest 1b.
// Type 2.3: one end connector 3a, externals 1c and the 1-color that is not
// `fill`, the rest `fill`. Throws Error(kBadContext) on a bad fill.
EdgeColoring ColorString(const DiamondString& string, const StringContext& ctx);

// Colors a substituted graph from one 2-factor of H: cycles by ColorCycle
// (choices[i] for cycle i, defaults when missing), strings by their type,
// and the matching edges with the triangle chords 1c. Not verified.
EdgeColoring ColorFromTwoFactor(const MultiGraph& g, const OumDecomposition& d,
                                const TwoFactor& factor,
                                const std::vector<CycleChoice>& choices,
                                StringEnd three_a_end = StringEnd::kLeft);

// Bridgeless claw-free cubic graphs. Throws Error(kNotDecomposable) from the
// decomposition, Error(kColoringFailed) if no candidate verifies.
EdgeColoring Color2ec(const MultiGraph& g, ColorerDiagnostics* diag = nullptr);

// Visits colorings of a bridgeless claw-free cubic graph with the anchor
// colored 1a and no 3a edge touching its endpoints, each verified, until
// `visit` returns false. Returns the number visited. Throws
// Error(kAnchorOnTriangle) if the anchor lies on a triangle and g is neither
// K4 nor a ring.
int ForEachAnchoredColoring(
    const MultiGraph& g, EdgeId anchor,
    const std::function<bool(const EdgeColoring&)>& visit,
    ColorerDiagnostics* diag = nullptr);

// First coloring from ForEachAnchoredColoring. Throws Error(kColoringFailed)
// when there is none.
EdgeColoring Color2ecAnchored(const MultiGraph& g, EdgeId anchor);

// A component of G - B(G): K3, diamond, or a larger component described by
// its boundary. Edges at degree-2 vertices only get 1a, 1b or 1c.
EdgeColoring ColorComponent(const MultiGraph& component,
                            const ComponentBoundary& boundary,
                            ColorerDiagnostics* diag = nullptr);

// Any connected claw-free cubic simple graph. Throws Error(kNotCubic),
// Error(kNotSimple), Error(kNotConnected) or Error(kNotClawFree) on bad input.
EdgeColoring ColorGraph(const MultiGraph& g, ColorerDiagnostics* diag = nullptr);

}  // namespace cfp

#endif  // CFP_COLORER_H_
