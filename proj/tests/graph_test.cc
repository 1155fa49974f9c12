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
#include <array>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

namespace cfp {
namespace {

using testing::ErrorOf;

TEST(MultiGraphTest, EmptyEdgeList) {
  const MultiGraph g = BuildGraph({});
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(MultiGraphTest, Triangle) {
  const MultiGraph g = BuildGraph({{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.IsSimple());
  EXPECT_EQ(g.Neighbors(VertexId{0}), (std::vector<VertexId>{VertexId{1}, VertexId{2}}));
}

TEST(MultiGraphTest, ParallelEdgesKeepDistinctIds) {
  const MultiGraph g = BuildGraph({{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.Degree(VertexId{0}), 3);
  EXPECT_EQ(g.Degree(VertexId{1}), 3);
  EXPECT_FALSE(g.IsSimple());
  EXPECT_EQ(g.EdgesBetween(VertexId{0}, VertexId{1}).size(), 3u);
  EXPECT_EQ(g.Neighbors(VertexId{0}).size(), 1u);
}

TEST(MultiGraphTest, LoopsAreRejected) {
  EXPECT_EQ(ErrorOf([] { BuildGraph({{0, 0}}); }), ErrorCode::kLoopRejected);
  GraphBuilder b;
  const VertexId v = b.AddVertex();
  EXPECT_EQ(ErrorOf([&] { b.AddEdge(v, v); }), ErrorCode::kLoopRejected);
}

TEST(MultiGraphTest, UnknownIdsThrow) {
  const MultiGraph g = BuildGraph({{0, 1}});
  EXPECT_EQ(ErrorOf([&] { g.edge(EdgeId{7}); }), ErrorCode::kUnknownEdge);
  EXPECT_EQ(ErrorOf([&] { g.incident(VertexId{9}); }), ErrorCode::kUnknownVertex);
  EXPECT_EQ(ErrorOf([&] { EdgeDistance(g, EdgeId{0}, EdgeId{3}); }),
            ErrorCode::kUnknownEdge);
}

TEST(MultiGraphTest, BuilderKeepsIdsStable) {
  const MultiGraph g = BuildGraph({{0, 1}, {1, 2}, {2, 3}});
  GraphBuilder b(g);
  b.RemoveEdge(EdgeId{1});
  const EdgeId fresh = b.AddEdge(VertexId{0}, VertexId{3});
  EXPECT_EQ(fresh, EdgeId{3});
  b.RemoveVertex(VertexId{2});
  const MultiGraph h = b.Build();
  EXPECT_TRUE(h.HasEdge(EdgeId{0}));
  EXPECT_FALSE(h.HasEdge(EdgeId{1}));
  EXPECT_FALSE(h.HasEdge(EdgeId{2}));
  EXPECT_EQ(h.edge(EdgeId{3}).u, VertexId{0});
  EXPECT_EQ(h.num_vertices(), 3u);
}

TEST(EdgeDistanceTest, Basics) {
  const MultiGraph path = BuildGraph({{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(EdgeDistance(path, EdgeId{0}, EdgeId{0}), Distance(0));
  EXPECT_EQ(EdgeDistance(path, EdgeId{0}, EdgeId{1}), Distance(1));
  EXPECT_EQ(EdgeDistance(path, EdgeId{0}, EdgeId{2}), Distance(2));
}

TEST(EdgeDistanceTest, DisconnectedIsInfinite) {
  const MultiGraph g = BuildGraph({{0, 1}, {2, 3}});
  const Distance d = EdgeDistance(g, EdgeId{0}, EdgeId{1});
  EXPECT_FALSE(d.is_finite());
  EXPECT_GT(d, Distance(1000));
}

TEST(EdgeDistanceTest, AgreesWithLineGraphOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const int m = 1 + static_cast<int>(rng() % (2 * n));
    const MultiGraph g = testing::RandomGraph(rng, n, m);
    const auto reference = testing::LineGraphDistances(g);
    for (const Edge& e : g.edges()) {
      for (const Edge& f : g.edges()) {
        const auto it = reference.find({e.id.value, f.id.value});
        const Distance d = EdgeDistance(g, e.id, f.id);
        if (it == reference.end()) {
          EXPECT_FALSE(d.is_finite());
        } else {
          EXPECT_EQ(d, Distance(it->second));
        }
      }
    }
  }
}

TEST(LineGraphTest, TriangleIsSelfDual) {
  const MultiGraph k3 = BuildGraph({{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(AreIsomorphicSmall(LineGraph(k3), k3));
}

TEST(LineGraphTest, PathShrinks) {
  const MultiGraph p4 = BuildGraph({{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(AreIsomorphicSmall(LineGraph(p4), BuildGraph({{0, 1}, {1, 2}})));
}

TEST(LineGraphTest, K4GivesOctahedron) {
  const MultiGraph k4 = BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const MultiGraph lg = LineGraph(k4);
  EXPECT_EQ(lg.num_vertices(), 6u);
  EXPECT_EQ(lg.num_edges(), 12u);
  // Two edges of K4 are adjacent iff they share an endpoint.
  for (const Edge& e : k4.edges()) {
    EXPECT_EQ(lg.Degree(VertexId{e.id.value}), 4);
    for (const Edge& f : k4.edges()) {
      if (e.id == f.id) continue;
      const bool share = e.Touches(f.u) || e.Touches(f.v);
      EXPECT_EQ(lg.Adjacent(VertexId{e.id.value}, VertexId{f.id.value}), share);
    }
  }
}

TEST(IsomorphismTest, RelabeledK4) {
  const MultiGraph a = BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const MultiGraph b = BuildGraph({{3, 2}, {1, 3}, {0, 2}, {2, 1}, {0, 3}, {1, 0}});
  EXPECT_TRUE(AreIsomorphicSmall(a, b));
}

TEST(IsomorphismTest, Distinguishes) {
  const MultiGraph k4 = BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const MultiGraph c4 = BuildGraph({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_FALSE(AreIsomorphicSmall(k4, c4));
  const MultiGraph dipole = BuildGraph({{0, 1}, {0, 1}, {0, 1}});
  const MultiGraph path = BuildGraph({{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(AreIsomorphicSmall(dipole, path));
}

TEST(IsomorphismTest, MultiplicityMatters) {
  const MultiGraph a = BuildGraph({{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  const MultiGraph b = BuildGraph({{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 3}, {1, 2}});
  const MultiGraph c = BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(AreIsomorphicSmall(a, b));
  EXPECT_FALSE(AreIsomorphicSmall(a, c));
}

TEST(IsomorphismTest, RandomPermutationsStayIsomorphic) {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const MultiGraph g = testing::RandomGraph(rng, n, n + static_cast<int>(rng() % n));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u.value], perm[e.v.value]);
    std::shuffle(edges.begin(), edges.end(), rng);
    GraphBuilder builder;
    for (int i = 0; i < n; ++i) builder.AddVertex(VertexId{i});
    for (const auto& [a, b] : edges) builder.AddEdge(VertexId{a}, VertexId{b});
    const MultiGraph h = builder.Build();
    EXPECT_TRUE(AreIsomorphicSmall(g, h));
    EXPECT_EQ(Fingerprint(g), Fingerprint(h));
  }
}

TEST(IsomorphismTest, TooLarge) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 17; ++i) edges.emplace_back(i, (i + 1) % 17);
  const MultiGraph g = BuildGraph(edges);
  EXPECT_EQ(ErrorOf([&] { AreIsomorphicSmall(g, g); }), ErrorCode::kTooLarge);
}

TEST(GraphUtilTest, ComponentsAndInducedSubgraph) {
  const MultiGraph g = BuildGraph({{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(ConnectedComponents(g).size(), 2u);
  EXPECT_FALSE(IsConnected(g));
  const std::array<VertexId, 2> keep = {VertexId{1}, VertexId{2}};
  const MultiGraph sub = InducedSubgraph(g, keep);
  EXPECT_EQ(sub.num_edges(), 1u);
  EXPECT_TRUE(sub.HasEdge(EdgeId{1}));
}

TEST(GraphUtilTest, Triangles) {
  const MultiGraph k4 = BuildGraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(Triangles(k4).size(), 4u);
  EXPECT_TRUE(OnTriangle(k4, EdgeId{0}));
  const MultiGraph c4 = BuildGraph({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(Triangles(c4).empty());
}

}  // namespace
}  // namespace cfp
