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

#include "cfp/structure.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cfp/error.h"

namespace cfp {
namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kNotDecomposable, what);
}

[[noreturn]] void Violation(const std::string& claim, const std::string& what) {
  throw Error(ErrorCode::kClaimViolation, claim + ": " + what);
}

std::string Name(VertexId v) { return std::to_string(v.value); }

EdgeId SingleEdge(const MultiGraph& g, VertexId a, VertexId b) {
  const auto between = g.EdgesBetween(a, b);
  if (between.size() != 1) {
    Fail("expected one edge between " + Name(a) + " and " + Name(b));
  }
  return between.front();
}

Diamond MakeDiamond(const MultiGraph& g, std::array<VertexId, 2> internal,
                    VertexId entry, VertexId exit) {
  std::sort(internal.begin(), internal.end());
  Diamond d;
  d.internal = internal;
  d.entry = entry;
  d.exit = exit;
  d.internal_edge = SingleEdge(g, internal[0], internal[1]);
  d.matchings[0] = {SingleEdge(g, entry, internal[0]),
                    SingleEdge(g, exit, internal[1])};
  d.matchings[1] = {SingleEdge(g, entry, internal[1]),
                    SingleEdge(g, exit, internal[0])};
  return d;
}

// The edge at external vertex x that leaves its diamond.
EdgeId OutsideEdge(const MultiGraph& g, const Diamond& d, VertexId x) {
  for (EdgeId e : g.incident(x)) {
    const VertexId other = g.edge(e).Other(x);
    if (other != d.internal[0] && other != d.internal[1]) return e;
  }
  Fail("external vertex " + Name(x) + " has no outside edge");
}

std::vector<DiamondString> ChainStrings(const MultiGraph& g,
                                        const std::vector<Diamond>& diamonds) {
  std::map<VertexId, int> external_of;
  for (std::size_t i = 0; i < diamonds.size(); ++i) {
    external_of[diamonds[i].entry] = static_cast<int>(i);
    external_of[diamonds[i].exit] = static_cast<int>(i);
  }
  std::vector<bool> used(diamonds.size(), false);
  std::vector<DiamondString> strings;
  for (std::size_t start = 0; start < diamonds.size(); ++start) {
    if (used[start]) continue;
    // Find an end of the chain: an external whose outside neighbor is not an
    // external of another diamond.
    std::optional<VertexId> end_vertex;
    for (VertexId x : {diamonds[start].entry, diamonds[start].exit}) {
      const VertexId t =
          g.edge(OutsideEdge(g, diamonds[start], x)).Other(x);
      if (!external_of.contains(t)) {
        end_vertex = x;
        break;
      }
    }
    if (!end_vertex) continue;  // Interior diamond; reached from an end.

    DiamondString s;
    int current = static_cast<int>(start);
    VertexId entry = *end_vertex;
    EdgeId connector = OutsideEdge(g, diamonds[current], entry);
    s.attach_left = g.edge(connector).Other(entry);
    while (true) {
      used[current] = true;
      const Diamond& base = diamonds[current];
      const VertexId exit = base.entry == entry ? base.exit : base.entry;
      s.connectors.push_back(connector);
      s.diamonds.push_back(MakeDiamond(g, base.internal, entry, exit));
      connector = OutsideEdge(g, base, exit);
      const VertexId next = g.edge(connector).Other(exit);
      const auto it = external_of.find(next);
      if (it == external_of.end()) {
        s.connectors.push_back(connector);
        s.attach_right = next;
        break;
      }
      if (used[it->second]) Fail("diamond chain closes on itself");
      current = it->second;
      entry = next;
    }
    if (s.attach_left == s.attach_right) {
      Fail("diamond string starts and ends at vertex " + Name(s.attach_left));
    }
    if (s.attach_right < s.attach_left) {
      std::reverse(s.diamonds.begin(), s.diamonds.end());
      std::reverse(s.connectors.begin(), s.connectors.end());
      for (Diamond& d : s.diamonds) d = MakeDiamond(g, d.internal, d.exit, d.entry);
      std::swap(s.attach_left, s.attach_right);
    }
    strings.push_back(std::move(s));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    Fail("some diamonds form a closed chain that is not the whole graph");
  }
  std::sort(strings.begin(), strings.end(),
            [](const DiamondString& a, const DiamondString& b) {
              return a.connectors.front() < b.connectors.front();
            });
  return strings;
}

// Returns the id of the connector at `left`.
EdgeId AddDiamondStringTo(GraphBuilder& builder, VertexId left, VertexId right,
                          int k) {
  VertexId previous = left;
  std::optional<EdgeId> first;
  for (int i = 0; i < k; ++i) {
    const VertexId entry = builder.AddVertex();
    const VertexId z = builder.AddVertex();
    const VertexId w = builder.AddVertex();
    const VertexId exit = builder.AddVertex();
    const EdgeId connector = builder.AddEdge(previous, entry);
    if (!first) first = connector;
    builder.AddEdge(z, w);
    builder.AddEdge(entry, z);
    builder.AddEdge(entry, w);
    builder.AddEdge(exit, z);
    builder.AddEdge(exit, w);
    previous = exit;
  }
  const EdgeId last = builder.AddEdge(previous, right);
  return first.value_or(last);
}

// Rebuilds the oriented k-diamond string that AddDiamondStringTo produced
// from `left`, reading roles back from the graph.
DiamondString ReadString(const MultiGraph& g, VertexId left, EdgeId first,
                         int k) {
  DiamondString s;
  s.attach_left = left;
  EdgeId connector = first;
  VertexId from = left;
  for (int i = 0;; ++i) {
    s.connectors.push_back(connector);
    const VertexId entry = g.edge(connector).Other(from);
    if (i == k) {
      s.attach_right = entry;
      break;
    }
    std::vector<VertexId> internal;
    for (EdgeId e : g.incident(entry)) {
      if (e != connector) internal.push_back(g.edge(e).Other(entry));
    }
    VertexId exit{};
    for (VertexId c : g.Neighbors(internal[0])) {
      if (c != entry && c != internal[1]) exit = c;
    }
    s.diamonds.push_back(MakeDiamond(g, {internal[0], internal[1]}, entry, exit));
    connector = OutsideEdge(g, s.diamonds.back(), exit);
    from = exit;
  }
  return s;
}

SubstitutedTriangle MakeTriangle(const MultiGraph& g,
                                 std::array<VertexId, 3> vertices) {
  std::sort(vertices.begin(), vertices.end());
  SubstitutedTriangle t;
  t.vertices = vertices;
  for (int i = 0; i < 3; ++i) {
    t.edges[i] = SingleEdge(g, vertices[(i + 1) % 3], vertices[(i + 2) % 3]);
  }
  return t;
}

}  // namespace

std::vector<VertexId> DiamondString::Vertices() const {
  std::vector<VertexId> out;
  for (const Diamond& d : diamonds) {
    out.insert(out.end(), {d.entry, d.internal[0], d.internal[1], d.exit});
  }
  return out;
}

std::vector<EdgeId> DiamondString::Edges() const {
  std::vector<EdgeId> out(connectors.begin(), connectors.end());
  for (const Diamond& d : diamonds) {
    out.push_back(d.internal_edge);
    for (const auto& m : d.matchings) out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeId SubstitutedTriangle::EdgeBetween(VertexId a, VertexId b) const {
  for (int i = 0; i < 3; ++i) {
    if (vertices[i] != a && vertices[i] != b) return edges[i];
  }
  throw Error(ErrorCode::kUnknownEdge, "not a triangle edge");
}

std::string_view OumKindName(OumKind kind) {
  switch (kind) {
    case OumKind::kK4: return "K4";
    case OumKind::kRingOfDiamonds: return "RingOfDiamonds";
    case OumKind::kSubstituted: return "Substituted";
  }
  return "?";
}

std::optional<VertexId> OumDecomposition::HVertexOf(VertexId v) const {
  for (const auto& [hv, t] : triangle_of) {
    if (std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end()) {
      return hv;
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> OumDecomposition::HEdgeAt(VertexId v) const {
  for (const auto& [he, r] : realization_of) {
    if (r.end_u == v || r.end_v == v) return he;
  }
  return std::nullopt;
}

std::optional<EdgeId> OumDecomposition::HEdgeContaining(EdgeId e) const {
  for (const auto& [he, r] : realization_of) {
    if (r.plain && *r.plain == e) return he;
    if (r.string) {
      const auto edges = r.string->Edges();
      if (std::binary_search(edges.begin(), edges.end(), e)) return he;
    }
  }
  return std::nullopt;
}

int OumDecomposition::TotalStringDiamonds() const {
  int total = 0;
  for (const auto& [he, r] : realization_of) {
    if (r.string) total += static_cast<int>(r.string->diamonds.size());
  }
  return total;
}

std::vector<Diamond> FindDiamonds(const MultiGraph& g) {
  std::vector<Diamond> out;
  for (const Edge& e : g.edges()) {
    const VertexId z = e.u;
    const VertexId w = e.v;
    if (g.Degree(z) != 3 || g.Degree(w) != 3) continue;
    if (g.EdgesBetween(z, w).size() != 1) continue;
    auto nz = g.Neighbors(z);
    auto nw = g.Neighbors(w);
    std::erase(nz, w);
    std::erase(nw, z);
    if (nz.size() != 2 || nz != nw) continue;
    const VertexId x = nz[0];
    const VertexId y = nz[1];
    if (g.Adjacent(x, y)) continue;
    if (g.EdgesBetween(z, x).size() != 1 || g.EdgesBetween(z, y).size() != 1 ||
        g.EdgesBetween(w, x).size() != 1 || g.EdgesBetween(w, y).size() != 1) {
      continue;
    }
    out.push_back(MakeDiamond(g, {z, w}, x, y));
  }
  return out;
}

std::optional<int> DetectRingOfDiamonds(const MultiGraph& g) {
  if (g.num_vertices() < 8 || !IsCubic(g) || !IsConnected(g)) {
    return std::nullopt;
  }
  const auto diamonds = FindDiamonds(g);
  std::set<VertexId> covered;
  for (const Diamond& d : diamonds) {
    covered.insert({d.entry, d.exit, d.internal[0], d.internal[1]});
  }
  if (covered.size() != g.num_vertices() ||
      4 * diamonds.size() != g.num_vertices()) {
    return std::nullopt;
  }
  return static_cast<int>(diamonds.size());
}

MultiGraph BuildRing(int k) {
  GraphBuilder builder;
  std::vector<VertexId> entries;
  std::vector<VertexId> exits;
  for (int i = 0; i < k; ++i) {
    const VertexId entry = builder.AddVertex();
    const VertexId z = builder.AddVertex();
    const VertexId w = builder.AddVertex();
    const VertexId exit = builder.AddVertex();
    builder.AddEdge(z, w);
    builder.AddEdge(entry, z);
    builder.AddEdge(entry, w);
    builder.AddEdge(exit, z);
    builder.AddEdge(exit, w);
    entries.push_back(entry);
    exits.push_back(exit);
  }
  for (int i = 0; i < k; ++i) builder.AddEdge(exits[i], entries[(i + 1) % k]);
  return builder.Build();
}

OumDecomposition OumDecompose(const MultiGraph& g) {
  if (!IsCubic(g)) Fail("graph is not cubic");
  if (!g.IsSimple()) Fail("graph has parallel edges");
  if (!IsTwoEdgeConnected(g)) Fail("graph is not 2-edge-connected");
  if (FindClaw(g)) Fail("graph contains a claw");

  OumDecomposition d;
  if (g.num_vertices() == 4) {
    d.kind = OumKind::kK4;
    return d;
  }
  const auto diamonds = FindDiamonds(g);
  if (const auto k = DetectRingOfDiamonds(g)) {
    d.kind = OumKind::kRingOfDiamonds;
    d.ring_size = *k;
    d.ring_diamonds = diamonds;
    return d;
  }

  const auto strings = ChainStrings(g, diamonds);
  std::set<VertexId> string_vertices;
  for (const auto& s : strings) {
    for (VertexId v : s.Vertices()) string_vertices.insert(v);
  }

  // Contract every maximal string to one edge.
  GraphBuilder contracted_builder;
  contracted_builder.ReserveIds(g.vertex_id_bound(), g.edge_id_bound());
  for (VertexId v : g.vertices()) {
    if (!string_vertices.contains(v)) contracted_builder.AddVertex(v);
  }
  for (const Edge& e : g.edges()) {
    if (!string_vertices.contains(e.u) && !string_vertices.contains(e.v)) {
      contracted_builder.AddEdge(e.id, e.u, e.v);
    }
  }
  std::map<EdgeId, int> string_of_edge;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const EdgeId id =
        contracted_builder.AddEdge(strings[i].attach_left, strings[i].attach_right);
    string_of_edge[id] = static_cast<int>(i);
  }
  const MultiGraph contracted = contracted_builder.Build();

  // Triangles must partition the remaining vertices.
  const auto triangles = Triangles(contracted);
  std::map<VertexId, int> triangle_index;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (VertexId v : triangles[i]) {
      if (!triangle_index.emplace(v, static_cast<int>(i)).second) {
        Fail("vertex " + Name(v) + " lies on two triangles after contraction");
      }
    }
  }
  for (VertexId v : contracted.vertices()) {
    if (!triangle_index.contains(v)) {
      Fail("vertex " + Name(v) + " lies on no triangle after contraction");
    }
  }

  GraphBuilder h_builder;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const VertexId hv{static_cast<int32_t>(i)};
    h_builder.AddVertex(hv);
    // Triangle edges must be plain single edges of g.
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const auto between =
            contracted.EdgesBetween(triangles[i][a], triangles[i][b]);
        if (between.size() != 1 || string_of_edge.contains(between.front())) {
          Fail("triangle edge is not a single plain edge");
        }
      }
    }
    d.triangle_of.emplace(hv, MakeTriangle(g, triangles[i]));
  }
  int32_t next_h_edge = 0;
  for (const Edge& e : contracted.edges()) {
    const int ta = triangle_index.at(e.u);
    const int tb = triangle_index.at(e.v);
    if (ta == tb) continue;  // Triangle edge.
    const EdgeId he{next_h_edge++};
    h_builder.AddEdge(he, VertexId{ta}, VertexId{tb});
    EdgeRealization r;
    r.end_u = e.u;
    r.end_v = e.v;
    if (const auto it = string_of_edge.find(e.id); it != string_of_edge.end()) {
      r.string = strings[it->second];
    } else {
      r.plain = e.id;
    }
    d.realization_of.emplace(he, std::move(r));
  }
  d.h = h_builder.Build();
  if (!IsCubic(d.h) || !IsTwoEdgeConnected(d.h)) {
    Fail("contracted multigraph H is not a 2-edge-connected cubic multigraph");
  }
  d.kind = OumKind::kSubstituted;
  return d;
}

SubstitutionResult SubstituteTriangles(
    const MultiGraph& h, const std::map<EdgeId, int>& string_lengths) {
  if (h.num_vertices() == 0 || !IsCubic(h)) {
    throw Error(ErrorCode::kInvalidPlan, "H must be a nonempty cubic multigraph");
  }
  for (const auto& [e, k] : string_lengths) {
    if (!h.HasEdge(e) || k < 1) {
      throw Error(ErrorCode::kInvalidPlan,
                  "bad string length for H edge " + std::to_string(e.value));
    }
  }
  GraphBuilder builder;
  std::map<VertexId, std::array<VertexId, 3>> corners;
  for (VertexId hv : h.vertices()) {
    std::array<VertexId, 3> t{builder.AddVertex(), builder.AddVertex(),
                              builder.AddVertex()};
    builder.AddEdge(t[0], t[1]);
    builder.AddEdge(t[1], t[2]);
    builder.AddEdge(t[0], t[2]);
    corners.emplace(hv, t);
  }
  auto port = [&h](VertexId hv, EdgeId he) {
    const auto inc = h.incident(hv);
    return static_cast<int>(std::find(inc.begin(), inc.end(), he) - inc.begin());
  };
  struct Pending {
    EdgeId he;
    VertexId end_u;
    VertexId end_v;
    EdgeId first;
  };
  std::vector<Pending> pending;
  for (const Edge& he : h.edges()) {
    const VertexId a = corners.at(he.u)[port(he.u, he.id)];
    const VertexId b = corners.at(he.v)[port(he.v, he.id)];
    const auto it = string_lengths.find(he.id);
    const VertexId left = std::min(a, b);
    const VertexId right = std::max(a, b);
    Pending p{he.id, a, b, EdgeId{}};
    if (it == string_lengths.end()) {
      p.first = builder.AddEdge(a, b);
    } else {
      p.first = AddDiamondStringTo(builder, left, right, it->second);
    }
    pending.push_back(p);
  }

  SubstitutionResult result;
  result.g = builder.Build();
  OumDecomposition& d = result.decomposition;
  d.kind = OumKind::kSubstituted;
  d.h = h;
  for (const auto& [hv, t] : corners) {
    d.triangle_of.emplace(hv, MakeTriangle(result.g, t));
  }
  for (const Pending& p : pending) {
    EdgeRealization r;
    r.end_u = p.end_u;
    r.end_v = p.end_v;
    if (const auto it = string_lengths.find(p.he); it != string_lengths.end()) {
      r.string = ReadString(result.g, std::min(p.end_u, p.end_v), p.first,
                            it->second);
    } else {
      r.plain = p.first;
    }
    d.realization_of.emplace(p.he, std::move(r));
  }
  return result;
}

MultiGraph Reconstruct(const OumDecomposition& d) {
  switch (d.kind) {
    case OumKind::kK4:
      return BuildRing(1);
    case OumKind::kRingOfDiamonds:
      return BuildRing(d.ring_size);
    case OumKind::kSubstituted: {
      std::map<EdgeId, int> lengths;
      for (const auto& [he, r] : d.realization_of) {
        if (r.string) lengths[he] = static_cast<int>(r.string->diamonds.size());
      }
      return SubstituteTriangles(d.h, lengths).g;
    }
  }
  return {};
}

BridgeDecomposition BridgeDecompose(const MultiGraph& g) {
  BridgeDecomposition d;
  d.bridges = FindBridges(g);
  if (d.bridges.empty()) {
    throw Error(ErrorCode::kNoBridges, "graph has no bridges");
  }
  GraphBuilder without(g);
  for (EdgeId e : d.bridges) without.RemoveEdge(e);
  const auto parts = ConnectedComponents(without.Build());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (VertexId v : parts[i]) d.component_of[v] = static_cast<int>(i);
    d.components.push_back(InducedSubgraph(g, parts[i]));
  }
  const int count = static_cast<int>(parts.size());
  d.tree.assign(count, {});
  for (EdgeId e : d.bridges) {
    const Edge& edge = g.edge(e);
    const int a = d.component_of.at(edge.u);
    const int b = d.component_of.at(edge.v);
    d.tree[a].push_back(b);
    d.tree[b].push_back(a);
  }
  for (auto& adj : d.tree) std::sort(adj.begin(), adj.end());

  auto bfs = [&d, count](int source) {
    std::vector<int> dist(count, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : d.tree[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return dist;
  };
  // A tree vertex ends a longest path iff its eccentricity is the diameter.
  std::vector<int> eccentricity(count);
  for (int i = 0; i < count; ++i) {
    const auto dist = bfs(i);
    eccentricity[i] = *std::max_element(dist.begin(), dist.end());
  }
  const int diameter = *std::max_element(eccentricity.begin(), eccentricity.end());
  d.root = static_cast<int>(
      std::find(eccentricity.begin(), eccentricity.end(), diameter) -
      eccentricity.begin());

  d.levels = bfs(d.root);
  d.up_edge.assign(count, std::nullopt);
  std::vector<bool> seen(count, false);
  std::deque<int> queue{d.root};
  seen[d.root] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    d.bfs_order.push_back(x);
    for (int y : d.tree[x]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (EdgeId e : d.bridges) {
    const Edge& edge = g.edge(e);
    const int a = d.component_of.at(edge.u);
    const int b = d.component_of.at(edge.v);
    const bool a_is_child = d.levels[a] > d.levels[b];
    const int child = a_is_child ? a : b;
    UpEdge up;
    up.p = a_is_child ? edge.u : edge.v;
    up.q = a_is_child ? edge.v : edge.u;
    up.bridge = e;
    up.parent = a_is_child ? b : a;
    d.up_edge[child] = up;
  }
  return d;
}

std::string_view ComponentClassName(ComponentClass c) {
  switch (c) {
    case ComponentClass::kK3: return "K3";
    case ComponentClass::kDiamond: return "Diamond";
    case ComponentClass::kBig: return "Big";
  }
  return "?";
}

ComponentClass ClassifyComponent(const MultiGraph& c) {
  std::vector<int> degrees;
  for (VertexId v : c.vertices()) degrees.push_back(c.Degree(v));
  std::sort(degrees.begin(), degrees.end());
  if (c.IsSimple() && IsConnected(c)) {
    if (degrees == std::vector<int>{2, 2, 2}) return ComponentClass::kK3;
    if (degrees == std::vector<int>{2, 2, 3, 3}) {
      std::vector<VertexId> deg2;
      std::vector<VertexId> deg3;
      for (VertexId v : c.vertices()) {
        (c.Degree(v) == 2 ? deg2 : deg3).push_back(v);
      }
      if (c.Adjacent(deg3[0], deg3[1]) && !c.Adjacent(deg2[0], deg2[1])) {
        return ComponentClass::kDiamond;
      }
    }
    if (c.num_vertices() >= 5 && degrees.front() >= 2 && degrees.back() == 3 &&
        IsTwoEdgeConnected(c)) {
      return ComponentClass::kBig;
    }
  }
  throw Error(ErrorCode::kClassificationFailed,
              "component with " + std::to_string(c.num_vertices()) +
                  " vertices is neither K3, a diamond, nor a big component");
}

ComponentBoundary ComputeComponentBoundary(const MultiGraph& c,
                                           std::optional<VertexId> up_vertex) {
  ComponentBoundary boundary;
  std::vector<VertexId> degree2;
  for (VertexId v : c.vertices()) {
    if (c.Degree(v) == 2) degree2.push_back(v);
  }
  if (up_vertex) {
    const auto it = std::find(degree2.begin(), degree2.end(), *up_vertex);
    if (it == degree2.end()) {
      Violation("up-vertex", "vertex " + Name(*up_vertex) + " is not of degree 2");
    }
    std::rotate(degree2.begin(), it, it + 1);
  }
  for (std::size_t i = 0; i < degree2.size(); ++i) {
    for (std::size_t j = i + 1; j < degree2.size(); ++j) {
      if (c.Adjacent(degree2[i], degree2[j])) {
        Violation("independent-set", "degree-2 vertices " + Name(degree2[i]) +
                                         " and " + Name(degree2[j]) +
                                         " are adjacent");
      }
    }
  }
  for (VertexId v : degree2) {
    const auto nbrs = c.Neighbors(v);
    if (nbrs.size() != 2 || !c.Adjacent(nbrs[0], nbrs[1])) {
      Violation("triangle", "degree-2 vertex " + Name(v) + " lies on no triangle");
    }
    BoundaryVertex bv{v, nbrs[0], nbrs[1], {}, {}};
    auto third = [&c](VertexId x, VertexId a, VertexId b) -> std::optional<VertexId> {
      for (VertexId y : c.Neighbors(x)) {
        if (y != a && y != b) return y;
      }
      return std::nullopt;
    };
    const auto s = third(bv.u, bv.v, bv.w);
    const auto b = third(bv.w, bv.u, bv.v);
    if (!s || !b) {
      Violation("s-b-distinct", "neighbors of " + Name(v) + " have degree 2");
    }
    bv.s = *s;
    bv.b = *b;
    if (bv.s == bv.b) {
      Violation("s-b-distinct", "s == b == " + Name(bv.s) + " at " + Name(v));
    }
    if (c.Degree(bv.s) != 3 || c.Degree(bv.b) != 3) {
      Violation("s-b-degree", "s or b has degree 2 at " + Name(v));
    }
    boundary.degree2.push_back(bv);
  }
  return boundary;
}

TildeConstruction BuildTilde(const MultiGraph& c,
                             const ComponentBoundary& boundary) {
  TildeConstruction t;
  const int r = boundary.r();
  if (r == 0) Violation("tilde", "component has no degree-2 vertex");
  GraphBuilder builder(c);
  t.odd = r % 2 == 1;
  int first_pair = 0;
  if (t.odd) {
    const BoundaryVertex& b1 = boundary.degree2.front();
    if (c.Adjacent(b1.s, b1.b)) {
      Violation("sb-non-edge", "s1 " + Name(b1.s) + " and b1 " + Name(b1.b) +
                                   " are already adjacent");
    }
    builder.RemoveVertex(b1.v);
    builder.RemoveVertex(b1.u);
    builder.RemoveVertex(b1.w);
    t.removed = {b1.v, b1.u, b1.w};
    t.added_sb = builder.AddEdge(b1.s, b1.b);
    first_pair = 1;
  }
  for (int j = first_pair; j + 1 < r; j += 2) {
    t.added_pair_edges.push_back(
        builder.AddEdge(boundary.degree2[j].v, boundary.degree2[j + 1].v));
  }
  t.tilde = builder.Build();
  if (!IsCubic(t.tilde) || !IsTwoEdgeConnected(t.tilde) || FindClaw(t.tilde)) {
    Violation("tilde", "constructed graph is not 2-edge-connected claw-free cubic");
  }
  if (t.odd && OnTriangle(t.tilde, *t.added_sb) && t.tilde.num_vertices() != 4) {
    Violation("sb-triangle", "s1b1 lies on a triangle of a graph other than K4");
  }
  return t;
}

}  // namespace cfp
