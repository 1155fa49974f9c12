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

#include "cfp/colorer.h"

#include <set>

#include <gtest/gtest.h>

#include "cfp/families.h"
#include "cfp/matching.h"
#include "cfp/recognition.h"
#include "cfp/verifier.h"
#include "oracles.h"

namespace cfp {
namespace {

using testing::ErrorOf;

int Count(const MultiGraph& g, const EdgeColoring& c, PackingColor color) {
  return c.CountOn(g, color);
}

TEST(ColorK4Test, ThreePerfectMatchings) {
  const MultiGraph k4 = GenK4();
  const EdgeColoring c = ColorK4(k4);
  EXPECT_TRUE(IsValidColoring(k4, c));
  for (PackingColor color : kOnePackingColors) EXPECT_EQ(Count(k4, c, color), 2);
  EXPECT_EQ(Count(k4, c, PackingColor::k3a), 0);
  EXPECT_EQ(ErrorOf([] { ColorK4(GenRing(2)); }), ErrorCode::kNotK4);
}

TEST(ColorRingTest, EachClassTakesTwoKEdges) {
  for (int k = 2; k <= 10; ++k) {
    const MultiGraph g = GenRing(k);
    const EdgeColoring c = ColorRing(g, k);
    EXPECT_TRUE(IsValidColoring(g, c)) << k;
    for (PackingColor color : kOnePackingColors) EXPECT_EQ(Count(g, c, color), 2 * k);
    EXPECT_EQ(Count(g, c, PackingColor::k3a), 0);
  }
  EXPECT_EQ(ErrorOf([] { ColorRing(GenK4(), 1); }), ErrorCode::kNotRing);
}

ExpandedCycle PlainCycle(int m) {
  ExpandedCycle cycle;
  for (int i = 0; i < 3 * m; ++i) {
    cycle.slots.push_back({VertexId{i}, VertexId{(i + 1) % (3 * m)}, EdgeId{i},
                           i % 3 == 2 ? std::optional<EdgeId>(EdgeId{i / 3}) : std::nullopt});
  }
  cycle.canonical_connector = 2;
  return cycle;
}

TEST(ColorCycleTest, EvenCycleAlternates) {
  const auto colors = ColorCycle(PlainCycle(2), {});
  ASSERT_EQ(colors.size(), 6u);
  EXPECT_EQ(colors[2], PackingColor::k1a);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NE(colors[i], PackingColor::k3a);
    EXPECT_NE(colors[i], colors[(i + 1) % 6]);
  }
  EXPECT_EQ(ColorCycle(PlainCycle(2), {.three_a_slot = -1, .flip = true})[2],
            PackingColor::k1b);
  EXPECT_EQ(ErrorOf([] { ColorCycle(PlainCycle(2), {.three_a_slot = 2}); }),
            ErrorCode::kBadAnchor);
}

TEST(ColorCycleTest, OddCycleHasOneThreeA) {
  const auto colors = ColorCycle(PlainCycle(3), {});
  ASSERT_EQ(colors.size(), 9u);
  int three_a = 0;
  for (int i = 0; i < 9; ++i) {
    if (colors[i] == PackingColor::k3a) {
      ++three_a;
      EXPECT_EQ(i % 3, 2);
      const PackingColor next = colors[(i + 1) % 9];
      const PackingColor prev = colors[(i + 8) % 9];
      EXPECT_NE(next, prev);
      EXPECT_NE(next, PackingColor::k1c);
      EXPECT_NE(prev, PackingColor::k1c);
    } else {
      EXPECT_NE(colors[i], colors[(i + 1) % 9]);
    }
  }
  EXPECT_EQ(three_a, 1);
  EXPECT_EQ(ErrorOf([] { ColorCycle(PlainCycle(3), {.three_a_slot = 1}); }),
            ErrorCode::kBadAnchor);
}

DiamondString OneStringOf(int length) {
  const auto result = SubstituteTriangles(GenDipole(), {{EdgeId{0}, length}});
  for (const auto& [id, real] : result.decomposition.realization_of) {
    if (real.is_string()) return *real.string;
  }
  ADD_FAILURE() << "no string";
  return {};
}

TEST(ColorStringTest, TypeOne) {
  const DiamondString s = OneStringOf(2);
  const EdgeColoring c = ColorString(s, {});
  for (const Diamond& d : s.diamonds) {
    for (EdgeId e : d.matchings[0]) EXPECT_EQ(c.Color(e), PackingColor::k1a);
    for (EdgeId e : d.matchings[1]) EXPECT_EQ(c.Color(e), PackingColor::k1b);
    EXPECT_EQ(c.Color(d.internal_edge), PackingColor::k1c);
  }
  for (EdgeId e : s.connectors) EXPECT_EQ(c.Color(e), PackingColor::k1c);
}

TEST(ColorStringTest, TypeTwoOneAndTwoTwo) {
  const DiamondString s = OneStringOf(1);
  const EdgeColoring c21 = ColorString(s, {.type = StringType::kType2_1});
  const EdgeColoring c22 = ColorString(s, {.type = StringType::kType2_2});
  const Diamond& d = s.diamonds[0];
  EXPECT_EQ(c21.Color(d.matchings[0][0]), PackingColor::k1b);
  EXPECT_EQ(c21.Color(d.matchings[1][0]), PackingColor::k1c);
  EXPECT_EQ(c21.Color(s.connectors[0]), PackingColor::k1a);
  EXPECT_EQ(c22.Color(d.matchings[1][1]), PackingColor::k1c);
  EXPECT_EQ(c22.Color(d.internal_edge), PackingColor::k1b);
}

TEST(ColorStringTest, TypeTwoThree) {
  const DiamondString s = OneStringOf(3);
  const EdgeColoring c = ColorString(s, {.type = StringType::kType2_3,
                                         .three_a_end = StringEnd::kRight,
                                         .fill = PackingColor::k1b});
  EXPECT_EQ(c.Color(s.connectors.back()), PackingColor::k3a);
  EXPECT_EQ(c.Color(s.connectors.front()), PackingColor::k1b);
  for (const Diamond& d : s.diamonds) {
    for (EdgeId e : d.matchings[0]) EXPECT_EQ(c.Color(e), PackingColor::k1c);
    for (EdgeId e : d.matchings[1]) EXPECT_EQ(c.Color(e), PackingColor::k1a);
  }
  EXPECT_EQ(ErrorOf([&] {
              ColorString(s, {.type = StringType::kType2_3, .fill = PackingColor::k1c});
            }),
            ErrorCode::kBadContext);
}

TEST(Color2ecTest, SubstitutedK4) {
  const MultiGraph g = SubstituteTriangles(GenK4(), {}).g;
  ColorerDiagnostics diag;
  const EdgeColoring c = Color2ec(g, &diag);
  EXPECT_EQ(g.num_edges(), 18u);
  EXPECT_TRUE(IsValidColoring(g, c));
  EXPECT_EQ(diag.variant, "Substituted");
  EXPECT_EQ(diag.backtracks, 0);
}

TEST(Color2ecTest, PrismWithRungsFirstUsesTwoThreeA) {
  // Rungs get the smallest ids, so the first perfect matching is the rungs
  // and the 2-factor is the two triangles.
  const MultiGraph prism =
      BuildGraph({{0, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const MultiGraph g = SubstituteTriangles(prism, {}).g;
  const EdgeColoring c = Color2ec(g);
  EXPECT_TRUE(IsValidColoring(g, c));
  EXPECT_EQ(c.CountOn(g, PackingColor::k3a), 2);
}

TEST(Color2ecTest, RingsAndK4NeedNoThreeA) {
  for (const MultiGraph& g : {GenK4(), GenRing(4), GenRing(7)}) {
    const EdgeColoring c = Color2ec(g);
    EXPECT_TRUE(IsValidColoring(g, c));
    EXPECT_EQ(c.CountOn(g, PackingColor::k3a), 0);
  }
}

TEST(Color2ecTest, RejectsNonDecomposable) {
  EXPECT_EQ(ErrorOf([] { Color2ec(GenPetersen()); }), ErrorCode::kNotDecomposable);
}

// Every 2-factor, every choice of 3a slot and flip, both string ends and a
// few string plans over all 2-edge-connected H on up to 8 vertices.
TEST(ColorFromTwoFactorTest, ExhaustiveOverSmallH) {
  int checked = 0;
  for (const MultiGraph& h : EnumerateCubicMultigraphs(8, true)) {
    std::vector<std::map<EdgeId, int>> plans = {{}};
    std::map<EdgeId, int> all;
    std::map<EdgeId, int> alternate;
    for (const Edge& e : h.edges()) {
      all[e.id] = 1 + e.id.value % 2;
      if (e.id.value % 2 == 0) alternate[e.id] = 2;
    }
    plans.push_back(all);
    plans.push_back(alternate);
    for (const auto& plan : plans) {
      const SubstitutionResult r = SubstituteTriangles(h, plan);
      ForEachPerfectMatching(h, {}, [&](const std::vector<EdgeId>& matching) {
        const TwoFactor factor = TwoFactorFromMatching(h, matching);
        std::vector<int> slot_counts;
        for (const FactorCycle& cycle : factor.cycles) {
          slot_counts.push_back(3 * static_cast<int>(cycle.size()));
        }
        for (int variant = 0; variant < 6; ++variant) {
          std::vector<CycleChoice> choices;
          for (std::size_t i = 0; i < factor.cycles.size(); ++i) {
            CycleChoice choice;
            choice.flip = variant % 2 == 1;
            if (factor.cycles[i].size() % 2 == 1) {
              choice.three_a_slot = (2 + 3 * (variant / 2)) % slot_counts[i];
            }
            choices.push_back(choice);
          }
          for (StringEnd end : {StringEnd::kLeft, StringEnd::kRight}) {
            const EdgeColoring c =
                ColorFromTwoFactor(r.g, r.decomposition, factor, choices, end);
            EXPECT_TRUE(IsValidColoring(r.g, c)) << Fingerprint(h).size();
            ++checked;
          }
        }
        return true;
      });
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(AnchoredTest, K4EveryEdge) {
  const MultiGraph k4 = GenK4();
  for (const Edge& e : k4.edges()) {
    const EdgeColoring c = Color2ecAnchored(k4, e.id);
    EXPECT_EQ(c.Color(e.id), PackingColor::k1a);
    EXPECT_TRUE(IsValidColoring(k4, c));
  }
}

bool ThreeAAvoids(const MultiGraph& g, const EdgeColoring& c, EdgeId anchor) {
  const Edge a = g.edge(anchor);
  for (EdgeId e : c.EdgesOfColor(g, PackingColor::k3a)) {
    const Edge f = g.edge(e);
    for (VertexId x : {f.u, f.v}) {
      if (x == a.u || x == a.v) return false;
    }
  }
  return true;
}

TEST(AnchoredTest, NonTriangleEdgesOfSubstitutedGraphs) {
  int graphs = 0;
  for (const MultiGraph& h : EnumerateCubicMultigraphs(6, true)) {
    for (const auto& plan : {std::map<EdgeId, int>{}, std::map<EdgeId, int>{{EdgeId{0}, 1}}}) {
      const MultiGraph g = SubstituteTriangles(h, plan).g;
      for (const Edge& e : g.edges()) {
        if (OnTriangle(g, e.id)) {
          EXPECT_EQ(ErrorOf([&] { Color2ecAnchored(g, e.id); }), ErrorCode::kAnchorOnTriangle);
          continue;
        }
        int seen = 0;
        ForEachAnchoredColoring(g, e.id, [&](const EdgeColoring& c) {
          EXPECT_EQ(c.Color(e.id), PackingColor::k1a);
          EXPECT_TRUE(ThreeAAvoids(g, c, e.id));
          EXPECT_TRUE(IsValidColoring(g, c));
          ++seen;
          return seen < 4;
        });
        EXPECT_GT(seen, 0);
      }
      ++graphs;
    }
  }
  EXPECT_GT(graphs, 5);
}

TEST(AnchoredTest, RingEveryEdge) {
  const MultiGraph g = GenRing(3);
  for (const Edge& e : g.edges()) {
    EXPECT_EQ(Color2ecAnchored(g, e.id).Color(e.id), PackingColor::k1a);
  }
}

TEST(ColorComponentTest, LeafWorkedInstance) {
  const MultiGraph leaf = GenLeaf7();
  const ComponentBoundary b = ComputeComponentBoundary(leaf, VertexId{0});
  const EdgeColoring c = ColorComponent(leaf, b);
  EXPECT_EQ(c.Color(EdgeId{3}), PackingColor::k1a);  // su
  EXPECT_EQ(c.Color(EdgeId{0}), PackingColor::k1b);  // uv
  EXPECT_EQ(c.Color(EdgeId{1}), PackingColor::k1a);  // vw
  EXPECT_EQ(c.Color(EdgeId{2}), PackingColor::k1c);  // uw
  EXPECT_EQ(c.Color(EdgeId{4}), PackingColor::k3a);  // wb
  EXPECT_TRUE(IsValidColoring(leaf, c));
}

TEST(ColorComponentTest, TriangleAndDiamond) {
  const MultiGraph k3 = BuildGraph({{0, 1}, {1, 2}, {0, 2}});
  const EdgeColoring c = ColorComponent(k3, {});
  std::set<PackingColor> colors;
  for (const Edge& e : k3.edges()) colors.insert(c.Color(e.id));
  EXPECT_EQ(colors.size(), 3u);
  EXPECT_FALSE(colors.contains(PackingColor::k3a));

  const MultiGraph diamond = BuildGraph({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const EdgeColoring d = ColorComponent(diamond, {});
  EXPECT_TRUE(IsValidColoring(diamond, d));
  EXPECT_EQ(d.CountOn(diamond, PackingColor::k3a), 0);
  for (VertexId v : {VertexId{0}, VertexId{3}}) {
    std::set<PackingColor> at;
    for (EdgeId inc : diamond.incident(v)) at.insert(d.Color(inc));
    EXPECT_EQ(at, (std::set<PackingColor>{PackingColor::k1a, PackingColor::k1b}));
  }
}

TEST(ColorGraphTest, LeafPair) {
  const MultiGraph g = GenLeaf7Pair();
  ColorerDiagnostics diag;
  const EdgeColoring c = ColorGraph(g, &diag);
  EXPECT_TRUE(IsValidColoring(g, c));
  EXPECT_EQ(c.Color(EdgeId{20}), PackingColor::k1c);
  EXPECT_EQ(c.CountOn(g, PackingColor::k3a), 2);
  EXPECT_EQ(diag.variant, "Bridged");
  EXPECT_EQ(diag.components, 2);
}

TEST(ColorGraphTest, TriangleStar) {
  const MultiGraph g = GenK3Star();
  const EdgeColoring c = ColorGraph(g);
  EXPECT_TRUE(IsValidColoring(g, c));
  const BridgeSet bridges = FindBridges(g);
  for (EdgeId e : bridges) EXPECT_NE(c.Color(e), PackingColor::k3a);
}

TEST(ColorGraphTest, Preconditions) {
  EXPECT_EQ(ErrorOf([] { ColorGraph(GenPetersen()); }), ErrorCode::kNotClawFree);
  EXPECT_EQ(ErrorOf([] { ColorGraph(GenDipole()); }), ErrorCode::kNotSimple);
  EXPECT_EQ(ErrorOf([] { ColorGraph(BuildGraph({{0, 1}, {1, 2}})); }), ErrorCode::kNotCubic);
  GraphBuilder b(GenK4());
  const auto copy = GenK4();
  const VertexId base{4};
  for (int i = 0; i < 4; ++i) b.AddVertex();
  for (const Edge& e : copy.edges()) {
    b.AddEdge(VertexId{base.value + e.u.value}, VertexId{base.value + e.v.value});
  }
  const MultiGraph two = b.Build();
  EXPECT_EQ(ErrorOf([&] { ColorGraph(two); }), ErrorCode::kNotConnected);
}

TEST(ColorGraphTest, RandomInstancesAreValid) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomOptions options;
    options.bridged = seed % 2 == 0;
    const MultiGraph g = GenRandomClawFreeCubic(seed, options);
    ColorerDiagnostics diag;
    const EdgeColoring c = ColorGraph(g, &diag);
    EXPECT_TRUE(Verify(g, c).empty()) << seed;
    EXPECT_EQ(diag.backtracks, 0) << seed;
  }
}

}  // namespace
}  // namespace cfp
