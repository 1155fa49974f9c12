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

#ifndef CFP_STRUCTURE_H_
#define CFP_STRUCTURE_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfp/graph.h"
#include "cfp/recognition.h"

namespace cfp {

// An induced K4 minus one edge. `entry` and `exit` are the two external
// (degree-2 within the diamond) vertices; inside a DiamondString the entry
// side faces attach_left. Unoriented diamonds list the smaller external as
// entry.
struct Diamond {
  std::array<VertexId, 2> internal;  // Ascending.
  VertexId entry;
  VertexId exit;
  EdgeId internal_edge;
  // The two sets of non-adjacent external edges:
  //   matchings[0] = {entry-internal[0], exit-internal[1]}
  //   matchings[1] = {entry-internal[1], exit-internal[0]}
  std::array<std::array<EdgeId, 2>, 2> matchings;
};

// k >= 1 diamonds chained between two attachment vertices. connectors has
// k + 1 entries: connectors[0] joins attach_left to diamonds[0].entry,
// connectors[i] joins diamonds[i-1].exit to diamonds[i].entry, and
// connectors[k] joins diamonds[k-1].exit to attach_right.
struct DiamondString {
  std::vector<Diamond> diamonds;
  std::vector<EdgeId> connectors;
  VertexId attach_left;
  VertexId attach_right;

  std::vector<VertexId> Vertices() const;
  std::vector<EdgeId> Edges() const;
};

// Triangle replacing one vertex of H. edges[i] is the triangle edge opposite
// vertices[i].
struct SubstitutedTriangle {
  std::array<VertexId, 3> vertices;  // Ascending.
  std::array<EdgeId, 3> edges;

  EdgeId EdgeBetween(VertexId a, VertexId b) const;
};

// How one edge of H appears in G: either a single edge or a diamond string.
// end_u / end_v are the triangle vertices of G where the realization meets
// the triangles of H's endpoints u and v (in the order stored in H).
struct EdgeRealization {
  std::optional<EdgeId> plain;
  std::optional<DiamondString> string;
  VertexId end_u;
  VertexId end_v;

  bool is_string() const { return string.has_value(); }
};

enum class OumKind { kK4, kRingOfDiamonds, kSubstituted };

std::string_view OumKindName(OumKind kind);

struct OumDecomposition {
  OumKind kind = OumKind::kK4;
  int ring_size = 0;                  // kRingOfDiamonds only.
  std::vector<Diamond> ring_diamonds;  // kRingOfDiamonds only.
  // kSubstituted only.
  MultiGraph h;
  std::map<VertexId, SubstitutedTriangle> triangle_of;
  std::map<EdgeId, EdgeRealization> realization_of;

  // The H vertex whose triangle contains g-vertex v, if any.
  std::optional<VertexId> HVertexOf(VertexId v) const;
  // The H edge realized through triangle vertex v (its port).
  std::optional<EdgeId> HEdgeAt(VertexId v) const;
  // The H edge whose realization contains the G edge e (plain edge or any
  // edge of a diamond string).
  std::optional<EdgeId> HEdgeContaining(EdgeId e) const;
  int TotalStringDiamonds() const;
};

// All induced diamonds of a cubic graph, one per internal edge, ordered by
// internal edge id.
std::vector<Diamond> FindDiamonds(const MultiGraph& g);

// k when g is a ring of k >= 2 diamonds, nullopt otherwise (including K4).
std::optional<int> DetectRingOfDiamonds(const MultiGraph& g);

// Structure decomposition of a 2-edge-connected claw-free cubic simple
// graph: K4, ring of diamonds, or triangle substitution of a 2-edge-connected
// cubic multigraph H with some edges replaced by diamond strings. Throws
// Error(kNotDecomposable) when any structural assertion fails.
OumDecomposition OumDecompose(const MultiGraph& g);

// k diamonds closed into a ring; k == 1 yields K4.
MultiGraph BuildRing(int k);

// Rebuilds a graph from the decomposition using fresh ids: one triangle per
// H vertex, one edge or fresh string of the recorded length per H edge.
MultiGraph Reconstruct(const OumDecomposition& d);

// Builds G from H: every vertex becomes a triangle, and H edge e becomes a
// string of string_lengths[e] diamonds when present. The returned
// decomposition describes the produced graph exactly. Throws
// Error(kInvalidPlan) when H is not a loopless cubic multigraph or a length
// is < 1.
struct SubstitutionResult {
  MultiGraph g;
  OumDecomposition decomposition;
};
SubstitutionResult SubstituteTriangles(
    const MultiGraph& h, const std::map<EdgeId, int>& string_lengths);

struct UpEdge {
  VertexId p;  // In the child component.
  VertexId q;  // In the parent component (the up-neighbor of p).
  EdgeId bridge;
  int parent = -1;
};

struct BridgeDecomposition {
  BridgeSet bridges;
  std::vector<MultiGraph> components;
  std::vector<std::vector<int>> tree;  // Sorted adjacency of component ids.
  int root = 0;
  std::vector<int> levels;
  std::vector<std::optional<UpEdge>> up_edge;  // nullopt for the root.
  std::vector<int> bfs_order;
  std::map<VertexId, int> component_of;
};

// Components of g - B(g), the bridge tree rooted at the smallest-index
// endpoint of a diameter path, BFS levels and up-edges. Throws
// Error(kNoBridges) when g is bridgeless.
BridgeDecomposition BridgeDecompose(const MultiGraph& g);

enum class ComponentClass { kK3, kDiamond, kBig };

std::string_view ComponentClassName(ComponentClass c);

// Throws Error(kClassificationFailed) when the component is none of K3,
// diamond, or 2-edge-connected with max degree 3 on >= 5 vertices.
ComponentClass ClassifyComponent(const MultiGraph& component);

// One degree-2 vertex v of a component with its triangle partners u, w
// (u < w), s the third neighbor of u and b the third neighbor of w.
struct BoundaryVertex {
  VertexId v;
  VertexId u;
  VertexId w;
  VertexId s;
  VertexId b;
};

struct ComponentBoundary {
  std::vector<BoundaryVertex> degree2;  // v_1 first, then ascending.
  int r() const { return static_cast<int>(degree2.size()); }
};

// Throws Error(kClaimViolation) naming the failed claim when the degree-2
// vertices are not independent, do not lie on triangles, or their s/b
// vertices coincide or have degree 2.
ComponentBoundary ComputeComponentBoundary(
    const MultiGraph& component, std::optional<VertexId> up_vertex);

struct TildeConstruction {
  MultiGraph tilde;
  bool odd = false;
  std::vector<EdgeId> added_pair_edges;
  // Odd parity only.
  std::optional<EdgeId> added_sb;
  std::array<VertexId, 3> removed{};
};

// Even r: pair v1v2, v3v4, ... . Odd r: delete {v1, u1, w1}, add s1b1, pair
// v2v3, v4v5, ... . Asserts the result is 2-edge-connected claw-free cubic
// (Error(kClaimViolation) otherwise).
TildeConstruction BuildTilde(const MultiGraph& component,
                             const ComponentBoundary& boundary);

}  // namespace cfp

#endif  // CFP_STRUCTURE_H_
