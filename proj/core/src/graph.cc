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

#include "cfp/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "cfp/error.h"

namespace cfp {

const Edge& MultiGraph::edge(EdgeId e) const {
  const int index = EdgeIndex(e);
  if (index < 0) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e.value));
  }
  return edges_[index];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  const int index = VertexIndex(v);
  if (index < 0) {
    throw Error(ErrorCode::kUnknownVertex,
                "vertex " + std::to_string(v.value));
  }
  return incidence_[index];
}

std::vector<VertexId> MultiGraph::Neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edge(e).Other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> MultiGraph::EdgesBetween(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(a)) {
    if (edge(e).Other(a) == b) out.push_back(e);
  }
  return out;
}

bool MultiGraph::Adjacent(VertexId a, VertexId b) const {
  for (EdgeId e : incident(a)) {
    if (edge(e).Other(a) == b) return true;
  }
  return false;
}

bool MultiGraph::IsSimple() const {
  for (VertexId v : vertices_) {
    const auto nbrs = Neighbors(v);
    if (nbrs.size() != incident(v).size()) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(const MultiGraph& base)
    : next_vertex_(base.vertex_id_bound()), next_edge_(base.edge_id_bound()) {
  vertices_.insert(base.vertices().begin(), base.vertices().end());
  for (const Edge& e : base.edges()) edges_.emplace(e.id, std::pair(e.u, e.v));
}

VertexId GraphBuilder::AddVertex() {
  VertexId v{next_vertex_++};
  vertices_.insert(v);
  return v;
}

void GraphBuilder::AddVertex(VertexId v) {
  vertices_.insert(v);
  next_vertex_ = std::max(next_vertex_, v.value + 1);
}

EdgeId GraphBuilder::AddEdge(VertexId u, VertexId v) {
  EdgeId id{next_edge_};
  AddEdge(id, u, v);
  return id;
}

void GraphBuilder::AddEdge(EdgeId id, VertexId u, VertexId v) {
  if (u == v) {
    throw Error(ErrorCode::kLoopRejected,
                "loop at vertex " + std::to_string(u.value));
  }
  AddVertex(u);
  AddVertex(v);
  edges_[id] = {u, v};
  next_edge_ = std::max(next_edge_, id.value + 1);
}

void GraphBuilder::ReserveIds(int32_t vertex_bound, int32_t edge_bound) {
  next_vertex_ = std::max(next_vertex_, vertex_bound);
  next_edge_ = std::max(next_edge_, edge_bound);
}

void GraphBuilder::RemoveEdge(EdgeId e) { edges_.erase(e); }

void GraphBuilder::RemoveVertex(VertexId v) {
  vertices_.erase(v);
  std::erase_if(edges_, [v](const auto& entry) {
    return entry.second.first == v || entry.second.second == v;
  });
}

MultiGraph GraphBuilder::Build() const {
  MultiGraph g;
  g.vertex_id_bound_ = next_vertex_;
  g.edge_id_bound_ = next_edge_;
  g.vertices_.assign(vertices_.begin(), vertices_.end());
  g.vertex_index_.assign(next_vertex_, -1);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    g.vertex_index_[g.vertices_[i].value] = static_cast<int>(i);
  }
  g.edge_index_.assign(next_edge_, -1);
  g.incidence_.resize(g.vertices_.size());
  for (const auto& [id, ends] : edges_) {
    g.edge_index_[id.value] = static_cast<int>(g.edges_.size());
    g.edges_.push_back(Edge{id, ends.first, ends.second});
    g.incidence_[g.vertex_index_[ends.first.value]].push_back(id);
    g.incidence_[g.vertex_index_[ends.second.value]].push_back(id);
  }
  return g;
}

MultiGraph BuildGraph(std::span<const std::pair<int, int>> edge_list) {
  GraphBuilder builder;
  for (const auto& [u, v] : edge_list) builder.AddEdge(VertexId{u}, VertexId{v});
  return builder.Build();
}

MultiGraph BuildGraph(std::initializer_list<std::pair<int, int>> edge_list) {
  return BuildGraph(std::span(edge_list.begin(), edge_list.size()));
}

std::vector<int> VertexDistances(const MultiGraph& g,
                                 std::span<const VertexId> sources,
                                 int max_depth) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<int> queue;
  for (VertexId s : sources) {
    const int index = g.VertexIndex(s);
    if (index >= 0 && dist[index] < 0) {
      dist[index] = 0;
      queue.push_back(index);
    }
  }
  while (!queue.empty()) {
    const int index = queue.front();
    queue.pop_front();
    if (dist[index] >= max_depth) continue;
    const VertexId v = g.vertices()[index];
    for (EdgeId e : g.incident(v)) {
      const int next = g.VertexIndex(g.edge(e).Other(v));
      if (dist[next] < 0) {
        dist[next] = dist[index] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

Distance EdgeDistance(const MultiGraph& g, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  if (e == f) return Distance(0);
  const VertexId sources[] = {a.u, a.v};
  const std::vector<int> dist = VertexDistances(g, sources);
  const int du = dist[g.VertexIndex(b.u)];
  const int dv = dist[g.VertexIndex(b.v)];
  if (du < 0 && dv < 0) return Distance::Infinite();
  const int best = du < 0 ? dv : (dv < 0 ? du : std::min(du, dv));
  return Distance(best + 1);
}

MultiGraph LineGraph(const MultiGraph& g) {
  GraphBuilder builder;
  for (const Edge& e : g.edges()) builder.AddVertex(VertexId{e.id.value});
  std::set<std::pair<int, int>> added;
  for (VertexId v : g.vertices()) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const std::pair key(std::min(inc[i].value, inc[j].value),
                            std::max(inc[i].value, inc[j].value));
        if (added.insert(key).second) {
          builder.AddEdge(VertexId{key.first}, VertexId{key.second});
        }
      }
    }
  }
  return builder.Build();
}

std::vector<std::vector<VertexId>> ConnectedComponents(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(g.num_vertices(), false);
  for (std::size_t start = 0; start < g.num_vertices(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> component;
    std::vector<int> stack{static_cast<int>(start)};
    seen[start] = true;
    while (!stack.empty()) {
      const int index = stack.back();
      stack.pop_back();
      const VertexId v = g.vertices()[index];
      component.push_back(v);
      for (EdgeId e : g.incident(v)) {
        const int next = g.VertexIndex(g.edge(e).Other(v));
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool IsConnected(const MultiGraph& g) {
  return ConnectedComponents(g).size() <= 1;
}

MultiGraph InducedSubgraph(const MultiGraph& g,
                           std::span<const VertexId> keep) {
  GraphBuilder builder;
  builder.ReserveIds(g.vertex_id_bound(), g.edge_id_bound());
  std::set<VertexId> kept(keep.begin(), keep.end());
  for (VertexId v : kept) builder.AddVertex(v);
  for (const Edge& e : g.edges()) {
    if (kept.contains(e.u) && kept.contains(e.v)) {
      builder.AddEdge(e.id, e.u, e.v);
    }
  }
  return builder.Build();
}

std::vector<std::array<VertexId, 3>> Triangles(const MultiGraph& g) {
  std::vector<std::array<VertexId, 3>> out;
  for (VertexId a : g.vertices()) {
    const auto na = g.Neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      if (na[i] <= a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        if (g.Adjacent(na[i], na[j])) out.push_back({a, na[i], na[j]});
      }
    }
  }
  return out;
}

bool OnTriangle(const MultiGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  for (VertexId w : g.Neighbors(edge.u)) {
    if (w != edge.v && g.Adjacent(w, edge.v)) return true;
  }
  return false;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix Multiplicities(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  Matrix m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    const int a = g.VertexIndex(e.u);
    const int b = g.VertexIndex(e.v);
    ++m[a][b];
    ++m[b][a];
  }
  return m;
}

// Degree plus sorted neighbor degrees (with multiplicity), a 1-round
// refinement signature.
std::vector<std::vector<int>> Signatures(const MultiGraph& g) {
  std::vector<std::vector<int>> sig(g.num_vertices());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const VertexId v = g.vertices()[i];
    sig[i].push_back(g.Degree(v));
    std::vector<int> nd;
    for (EdgeId e : g.incident(v)) nd.push_back(g.Degree(g.edge(e).Other(v)));
    std::sort(nd.begin(), nd.end());
    sig[i].insert(sig[i].end(), nd.begin(), nd.end());
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const MultiGraph& a, const MultiGraph& b)
      : ma_(Multiplicities(a)),
        mb_(Multiplicities(b)),
        sa_(Signatures(a)),
        sb_(Signatures(b)),
        n_(a.num_vertices()),
        map_(n_, -1),
        used_(n_, false) {
    // Order a's vertices so each one (after the first of its component) has
    // an already-placed neighbor; this maximizes pruning.
    std::vector<bool> placed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      int best = -1;
      int best_links = -1;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (std::size_t w = 0; w < n_; ++w) {
          if (placed[w]) links += ma_[v][w];
        }
        if (links > best_links) {
          best = static_cast<int>(v);
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool Run() { return Extend(0); }

 private:
  bool Extend(std::size_t depth) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || sa_[v] != sb_[c]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int w = order_[d];
        ok = ma_[v][w] == mb_[c][map_[w]];
      }
      if (!ok) continue;
      map_[v] = static_cast<int>(c);
      used_[c] = true;
      if (Extend(depth + 1)) return true;
      used_[c] = false;
      map_[v] = -1;
    }
    return false;
  }

  Matrix ma_;
  Matrix mb_;
  std::vector<std::vector<int>> sa_;
  std::vector<std::vector<int>> sb_;
  std::size_t n_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

bool AreIsomorphicSmall(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() > kMaxIsomorphismVertices ||
      b.num_vertices() > kMaxIsomorphismVertices) {
    throw Error(ErrorCode::kTooLarge,
                "isomorphism test limited to " +
                    std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  auto sa = Signatures(a);
  auto sb = Signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return IsoSearch(a, b).Run();
}

std::vector<int64_t> Fingerprint(const MultiGraph& g) {
  std::vector<int64_t> out{static_cast<int64_t>(g.num_vertices()),
                           static_cast<int64_t>(g.num_edges())};
  std::vector<int64_t> degrees;
  for (VertexId v : g.vertices()) degrees.push_back(g.Degree(v));
  std::sort(degrees.begin(), degrees.end());
  out.insert(out.end(), degrees.begin(), degrees.end());

  std::vector<int64_t> per_vertex(g.num_vertices(), 0);
  const auto triangles = Triangles(g);
  for (const auto& t : triangles) {
    for (VertexId v : t) ++per_vertex[g.VertexIndex(v)];
  }
  out.push_back(static_cast<int64_t>(triangles.size()));
  std::sort(per_vertex.begin(), per_vertex.end());
  out.insert(out.end(), per_vertex.begin(), per_vertex.end());

  int64_t parallel = 0;
  for (VertexId v : g.vertices()) {
    parallel += static_cast<int64_t>(g.incident(v).size() - g.Neighbors(v).size());
  }
  out.push_back(parallel);
  return out;
}

}  // namespace cfp
