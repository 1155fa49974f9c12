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

#ifndef CFP_GRAPH_H_
#define CFP_GRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace cfp {

struct VertexId {
  int32_t value = -1;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  int32_t value = -1;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  // The endpoint that is not `x`. For a parallel pair both endpoints differ
  // from each other, so this is always well defined on a loopless graph.
  VertexId Other(VertexId x) const { return x == u ? v : u; }
  bool Touches(VertexId x) const { return x == u || x == v; }
};

// Edge distance in the line-graph sense. Edges in different connected
// components are at infinite distance, which compares greater than every
// finite value.
class Distance {
 public:
  static constexpr Distance Infinite() { return Distance(); }
  constexpr explicit Distance(int value) : value_(value) {}

  constexpr bool is_finite() const { return value_ >= 0; }
  // Only meaningful when is_finite().
  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Distance a, Distance b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.is_finite() != b.is_finite()) {
      return a.is_finite() ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Distance() : value_(-1) {}
  int value_;
};

// Undirected loopless multigraph. Vertex and edge identifiers are opaque,
// stable and totally ordered; parallel edges carry distinct ids. Instances
// are immutable; use GraphBuilder to derive new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Sorted ascending.
  std::span<const VertexId> vertices() const { return vertices_; }
  // Sorted by id.
  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool HasVertex(VertexId v) const { return VertexIndex(v) >= 0; }
  bool HasEdge(EdgeId e) const { return EdgeIndex(e) >= 0; }

  // Dense positions in vertices() / edges(); -1 when absent.
  int VertexIndex(VertexId v) const {
    return v.value >= 0 && v.value < static_cast<int>(vertex_index_.size())
               ? vertex_index_[v.value]
               : -1;
  }
  int EdgeIndex(EdgeId e) const {
    return e.value >= 0 && e.value < static_cast<int>(edge_index_.size())
               ? edge_index_[e.value]
               : -1;
  }

  // Throws Error(kUnknownEdge).
  const Edge& edge(EdgeId e) const;
  // Incident edge ids in ascending order. Throws Error(kUnknownVertex).
  std::span<const EdgeId> incident(VertexId v) const;
  int Degree(VertexId v) const {
    return static_cast<int>(incident(v).size());
  }
  // Distinct neighbors, ascending.
  std::vector<VertexId> Neighbors(VertexId v) const;
  std::vector<EdgeId> EdgesBetween(VertexId a, VertexId b) const;
  bool Adjacent(VertexId a, VertexId b) const;
  bool IsSimple() const;

  // One past the largest id ever used; fresh ids handed out by GraphBuilder
  // start here so ids are never reused within one construction lineage.
  int32_t vertex_id_bound() const { return vertex_id_bound_; }
  int32_t edge_id_bound() const { return edge_id_bound_; }

 private:
  friend class GraphBuilder;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> vertex_index_;
  std::vector<int> edge_index_;
  std::vector<std::vector<EdgeId>> incidence_;
  int32_t vertex_id_bound_ = 0;
  int32_t edge_id_bound_ = 0;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  // Starts from a copy of `base`; fresh ids continue past base's bounds.
  explicit GraphBuilder(const MultiGraph& base);

  VertexId AddVertex();
  void AddVertex(VertexId v);
  // Adds missing endpoints. Throws Error(kLoopRejected) when u == v.
  EdgeId AddEdge(VertexId u, VertexId v);
  void AddEdge(EdgeId id, VertexId u, VertexId v);
  void RemoveEdge(EdgeId e);
  // Fresh ids handed out later start at or above these bounds.
  void ReserveIds(int32_t vertex_bound, int32_t edge_bound);
  // Removes the vertex and every incident edge.
  void RemoveVertex(VertexId v);

  bool HasVertex(VertexId v) const { return vertices_.contains(v); }
  bool HasEdge(EdgeId e) const { return edges_.contains(e); }

  MultiGraph Build() const;

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
  int32_t next_vertex_ = 0;
  int32_t next_edge_ = 0;
};

// One edge per list entry, ids 0..m-1 in list order; vertex i is VertexId{i}.
// Throws Error(kLoopRejected) on any (v, v) entry.
MultiGraph BuildGraph(std::span<const std::pair<int, int>> edge_list);
MultiGraph BuildGraph(std::initializer_list<std::pair<int, int>> edge_list);

// BFS vertex distances from a set of sources, indexed by VertexIndex. Vertices
// farther than `max_depth` (or unreachable) get -1.
std::vector<int> VertexDistances(const MultiGraph& g,
                                 std::span<const VertexId> sources,
                                 int max_depth = std::numeric_limits<int>::max());

// 0 iff e == f, otherwise 1 + the minimum vertex distance between an endpoint
// of e and an endpoint of f. Throws Error(kUnknownEdge).
Distance EdgeDistance(const MultiGraph& g, EdgeId e, EdgeId f);

// Vertex i of the result is the edge with id i of g; two vertices are joined
// by a single edge iff the edges share an endpoint.
MultiGraph LineGraph(const MultiGraph& g);

std::vector<std::vector<VertexId>> ConnectedComponents(const MultiGraph& g);
bool IsConnected(const MultiGraph& g);

// Keeps the listed vertices and every edge with both endpoints among them;
// ids are preserved.
MultiGraph InducedSubgraph(const MultiGraph& g, std::span<const VertexId> keep);

// Triangles as ascending vertex triples, each reported once.
std::vector<std::array<VertexId, 3>> Triangles(const MultiGraph& g);
bool OnTriangle(const MultiGraph& g, EdgeId e);

inline constexpr std::size_t kMaxIsomorphismVertices = 16;

// Exhaustive search for a vertex bijection preserving edge multiplicities.
// Throws Error(kTooLarge) above kMaxIsomorphismVertices.
bool AreIsomorphicSmall(const MultiGraph& a, const MultiGraph& b);

// Cheap isomorphism invariant used for graphs too large for the exact test:
// vertex and edge counts, sorted degree sequence, triangle count, sorted
// multiset of per-vertex triangle counts.
std::vector<int64_t> Fingerprint(const MultiGraph& g);

}  // namespace cfp

template <>
struct std::hash<cfp::VertexId> {
  std::size_t operator()(cfp::VertexId v) const noexcept {
    return std::hash<int32_t>()(v.value);
  }
};

template <>
struct std::hash<cfp::EdgeId> {
  std::size_t operator()(cfp::EdgeId e) const noexcept {
    return std::hash<int32_t>()(e.value);
  }
};

#endif  // CFP_GRAPH_H_
