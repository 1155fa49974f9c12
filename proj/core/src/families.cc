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

#include "cfp/families.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>

#include "cfp/error.h"
#include "cfp/recognition.h"

namespace cfp {
namespace {

constexpr int kMaxAttempts = 1000;

// Copies `part` into the builder with fresh ids and returns the vertex map.
std::map<VertexId, VertexId> AddCopy(GraphBuilder& builder, const MultiGraph& part) {
  std::map<VertexId, VertexId> map;
  for (VertexId v : part.vertices()) map[v] = builder.AddVertex();
  for (const Edge& e : part.edges()) builder.AddEdge(map[e.u], map[e.v]);
  return map;
}

// A piece of a bridged composition and its degree-2 vertices.
struct Piece {
  MultiGraph g;
  std::vector<VertexId> ports;
};

Piece TrianglePiece() {
  return {BuildGraph({{0, 1}, {1, 2}, {0, 2}}),
          {VertexId{0}, VertexId{1}, VertexId{2}}};
}

Piece DiamondPiece() {
  // Internal 0, 1; external 2, 3.
  return {BuildGraph({{0, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}}),
          {VertexId{2}, VertexId{3}}};
}

// r pendant triangles on distinct edges of a claw-free cubic base. Edges on
// triangles are avoided except on K4, where only r = 1 is used.
Piece BigPiece(Rng& rng, int r, int string_percent) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    MultiGraph base;
    std::vector<EdgeId> candidates;
    if (r == 1 && rng.Uniform(3) == 0) {
      base = GenK4();
      for (const Edge& e : base.edges()) candidates.push_back(e.id);
    } else {
      const int h_vertices = 2 * (1 + rng.Uniform(2 + r / 2));
      const MultiGraph h = RandomTwoEdgeConnectedCubic(rng, h_vertices);
      std::map<EdgeId, int> strings;
      for (const Edge& e : h.edges()) {
        if (rng.Uniform(100) < string_percent) strings[e.id] = 1 + rng.Uniform(2);
      }
      base = SubstituteTriangles(h, strings).g;
      for (const Edge& e : base.edges()) {
        if (!OnTriangle(base, e.id)) candidates.push_back(e.id);
      }
    }
    if (static_cast<int>(candidates.size()) < r) continue;
    rng.Shuffle(candidates);
    GraphBuilder builder(base);
    Piece piece;
    for (int i = 0; i < r; ++i) {
      const Edge e = base.edge(candidates[i]);
      builder.RemoveEdge(e.id);
      const VertexId u = builder.AddVertex();
      const VertexId v = builder.AddVertex();
      const VertexId w = builder.AddVertex();
      builder.AddEdge(e.u, u);
      builder.AddEdge(u, v);
      builder.AddEdge(v, w);
      builder.AddEdge(u, w);
      builder.AddEdge(w, e.v);
      piece.ports.push_back(v);
    }
    piece.g = builder.Build();
    return piece;
  }
  throw Error(ErrorCode::kGenerationFailed, "no base with enough free edges");
}

// Random labeled tree on n >= 2 nodes from a Pruefer sequence.
std::vector<std::pair<int, int>> RandomTree(Rng& rng, int n) {
  if (n == 2) return {{0, 1}};
  std::vector<int> code(n - 2);
  for (int& c : code) c = rng.Uniform(n);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<std::pair<int, int>> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 1) last.push_back(i);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

void CheckClawFreeCubic(const MultiGraph& g, const std::string& what) {
  if (!IsCubic(g) || !g.IsSimple() || !IsConnected(g) || FindClaw(g)) {
    throw Error(ErrorCode::kGenerationFailed,
                what + " is not a connected claw-free cubic simple graph");
  }
}

// Connected loopless cubic multigraphs with vertices labeled in discovery
// order: each vertex fills its stubs with already discovered vertices of
// larger index or with the next new vertex, partners non-decreasing.
class CubicEnumerator {
 public:
  explicit CubicEnumerator(int n) : n_(n), mult_(n, std::vector<int>(n, 0)), deg_(n, 0) {}

  std::vector<MultiGraph> Run() {
    discovered_ = 1;
    Fill(0, 1);
    return std::move(found_);
  }

 private:
  void Fill(int i, int min_partner) {
    if (i == n_) {
      Record();
      return;
    }
    if (deg_[i] == 3) {
      if (i + 1 < n_ && i + 1 >= discovered_) return;  // Disconnected.
      Fill(i + 1, i + 2);
      return;
    }
    const int top = std::min(discovered_, n_ - 1);
    for (int j = std::max(min_partner, i + 1); j <= top; ++j) {
      if (deg_[j] == 3) continue;
      const bool fresh = j == discovered_;
      if (fresh) ++discovered_;
      ++mult_[i][j];
      ++deg_[i];
      ++deg_[j];
      Fill(i, j);
      --deg_[j];
      --deg_[i];
      --mult_[i][j];
      if (fresh) {
        --discovered_;
        break;  // Any later j would skip a vertex.
      }
    }
  }

  void Record() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        for (int k = 0; k < mult_[i][j]; ++k) edges.emplace_back(i, j);
      }
    }
    MultiGraph g = BuildGraph(edges);
    const auto print = Fingerprint(g);
    auto& bucket = buckets_[print];
    for (int index : bucket) {
      if (AreIsomorphicSmall(found_[index], g)) return;
    }
    bucket.push_back(static_cast<int>(found_.size()));
    found_.push_back(std::move(g));
  }

  int n_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> deg_;
  int discovered_ = 1;
  std::vector<MultiGraph> found_;
  std::map<std::vector<int64_t>, std::vector<int>> buckets_;
};

}  // namespace

MultiGraph GenRing(int k) {
  if (k < 2) {
    throw Error(ErrorCode::kBadCount, "a ring needs at least 2 diamonds; use K4");
  }
  return BuildRing(k);
}

MultiGraph GenK4() {
  return BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

MultiGraph GenPetersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return BuildGraph(edges);
}

MultiGraph GenTietze() {
  const MultiGraph petersen = GenPetersen();
  const VertexId x{0};
  GraphBuilder builder(petersen);
  const std::vector<VertexId> around = petersen.Neighbors(x);
  builder.RemoveVertex(x);
  std::array<VertexId, 3> tri;
  for (int i = 0; i < 3; ++i) {
    tri[i] = builder.AddVertex();
    builder.AddEdge(tri[i], around[i]);
  }
  builder.AddEdge(tri[0], tri[1]);
  builder.AddEdge(tri[1], tri[2]);
  builder.AddEdge(tri[0], tri[2]);
  return builder.Build();
}

MultiGraph GenLeaf7() {
  return BuildGraph({{1, 0}, {0, 2}, {1, 2}, {1, 3}, {2, 4},
                     {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

MultiGraph GenLeaf7Pair() {
  GraphBuilder builder;
  const auto first = AddCopy(builder, GenLeaf7());
  const auto second = AddCopy(builder, GenLeaf7());
  builder.AddEdge(first.at(VertexId{0}), second.at(VertexId{0}));
  return builder.Build();
}

MultiGraph GenK3Star() {
  GraphBuilder builder;
  const auto tri = AddCopy(builder, TrianglePiece().g);
  for (int i = 0; i < 3; ++i) {
    const auto leaf = AddCopy(builder, GenLeaf7());
    builder.AddEdge(tri.at(VertexId{i}), leaf.at(VertexId{0}));
  }
  return builder.Build();
}

MultiGraph GenDipole() { return BuildGraph({{0, 1}, {0, 1}, {0, 1}}); }

SubstitutionResult GenSubstituted(const SubstitutionPlan& plan) {
  if (!IsTwoEdgeConnected(plan.h)) {
    throw Error(ErrorCode::kInvalidPlan, "H must be 2-edge-connected");
  }
  return SubstituteTriangles(plan.h, plan.strings);
}

MultiGraph RandomTwoEdgeConnectedCubic(Rng& rng, int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidPlan, "H needs an even order >= 2");
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm);
    bool fixed_point = false;
    for (int i = 0; i < n; ++i) fixed_point = fixed_point || perm[i] == i;
    if (fixed_point) continue;
    std::vector<std::pair<int, int>> edges;
    // One edge per arc; a 2-cycle yields a parallel pair.
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(std::min(i, perm[i]), std::max(i, perm[i]));
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    for (int i = 0; i < n; i += 2) {
      edges.emplace_back(std::min(order[i], order[i + 1]),
                         std::max(order[i], order[i + 1]));
    }
    const MultiGraph h = BuildGraph(edges);
    if (IsCubic(h) && IsTwoEdgeConnected(h)) return h;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no 2-edge-connected cubic multigraph after bounded retries");
}

SubstitutionResult GenRandomSubstituted(uint64_t seed, const RandomOptions& options) {
  Rng rng(seed);
  const MultiGraph h = RandomTwoEdgeConnectedCubic(rng, options.h_vertices);
  std::map<EdgeId, int> strings;
  for (const Edge& e : h.edges()) {
    if (rng.Uniform(100) < options.string_percent) {
      strings[e.id] = 1 + rng.Uniform(std::max(1, options.max_string_length));
    }
  }
  SubstitutionResult result = SubstituteTriangles(h, strings);
  CheckClawFreeCubic(result.g, "random substitution");
  return result;
}

MultiGraph GenRandomClawFreeCubic(uint64_t seed, const RandomOptions& options) {
  if (!options.bridged) return GenRandomSubstituted(seed, options).g;
  Rng rng(seed);
  const int count = options.components > 0 ? options.components : 2 + rng.Uniform(5);
  if (count < 2) throw Error(ErrorCode::kBadCount, "bridged graphs need >= 2 components");
  const auto tree = RandomTree(rng, count);
  std::vector<int> degree(count, 0);
  for (const auto& [a, b] : tree) {
    ++degree[a];
    ++degree[b];
  }
  GraphBuilder builder;
  std::vector<std::vector<VertexId>> ports(count);
  for (int i = 0; i < count; ++i) {
    Piece piece;
    if (degree[i] == 3 && rng.Uniform(2) == 0) {
      piece = TrianglePiece();
    } else if (degree[i] == 2 && rng.Uniform(2) == 0) {
      piece = DiamondPiece();
    } else {
      piece = BigPiece(rng, degree[i], options.string_percent);
    }
    const auto map = AddCopy(builder, piece.g);
    for (VertexId p : piece.ports) ports[i].push_back(map.at(p));
  }
  std::vector<std::size_t> next(count, 0);
  for (const auto& [a, b] : tree) {
    builder.AddEdge(ports[a][next[a]++], ports[b][next[b]++]);
  }
  const MultiGraph g = builder.Build();
  CheckClawFreeCubic(g, "bridged composition");
  if (FindBridges(g).empty()) {
    throw Error(ErrorCode::kGenerationFailed, "bridged composition has no bridge");
  }
  return g;
}

std::vector<MultiGraph> EnumerateCubicMultigraphs(int max_vertices,
                                                  bool two_edge_connected_only) {
  if (max_vertices > 10) {
    throw Error(ErrorCode::kTooLarge, "enumeration is limited to 10 vertices");
  }
  std::vector<MultiGraph> out;
  for (int n = 2; n <= max_vertices; n += 2) {
    for (MultiGraph& g : CubicEnumerator(n).Run()) {
      if (!two_edge_connected_only || IsTwoEdgeConnected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<CorpusEntry> BuildCorpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> out;
  for (int k = 2; k <= 10; ++k) {
    out.push_back({"ring-" + std::to_string(k), "ring", GenRing(k), std::nullopt});
  }
  out.push_back({"k4", "named", GenK4(), std::nullopt});
  out.push_back({"leaf7-pair", "named", GenLeaf7Pair(), std::nullopt});
  out.push_back({"k3-star", "named", GenK3Star(), std::nullopt});
  const auto hs = EnumerateCubicMultigraphs(8, true);
  for (std::size_t hi = 0; hi < hs.size(); ++hi) {
    const MultiGraph& h = hs[hi];
    auto add = [&](const std::map<EdgeId, int>& strings, const std::string& tag) {
      SubstitutionResult r = GenSubstituted({h, strings});
      out.push_back({"sub-h" + std::to_string(hi) + tag, "substituted",
                     std::move(r.g), std::move(r.decomposition)});
    };
    add({}, "");
    for (int count = 1; count <= 3; ++count) {
      for (int length = 1; length <= 3; ++length) {
        Rng rng(1000 * hi + 10 * count + length);
        std::vector<EdgeId> ids;
        for (const Edge& e : h.edges()) ids.push_back(e.id);
        rng.Shuffle(ids);
        std::map<EdgeId, int> strings;
        for (int i = 0; i < count && i < static_cast<int>(ids.size()); ++i) {
          strings[ids[i]] = length;
        }
        add(strings, "-s" + std::to_string(count) + "x" + std::to_string(length));
      }
    }
  }
  const std::vector<int> sizes = options.sizes.empty() ? std::vector<int>{6} : options.sizes;
  for (uint64_t seed = options.seed_begin; seed <= options.seed_end; ++seed) {
    RandomOptions random;
    random.h_vertices = sizes[seed % sizes.size()];
    SubstitutionResult r = GenRandomSubstituted(seed, random);
    out.push_back({"random-" + std::to_string(seed), "random", std::move(r.g),
                   std::move(r.decomposition)});
    random.bridged = true;
    out.push_back({"bridged-" + std::to_string(seed), "bridged",
                   GenRandomClawFreeCubic(seed, random), std::nullopt});
  }
  return out;
}

}  // namespace cfp
