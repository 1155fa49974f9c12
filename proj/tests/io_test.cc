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

#include "cfp/io.h"

#include <gtest/gtest.h>

#include "cfp/colorer.h"
#include "cfp/families.h"
#include "oracles.h"

namespace cfp {
namespace {

using testing::ErrorOf;

bool SameGraph(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    if (a.vertices()[i] != b.vertices()[i]) return false;
  }
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    const Edge& x = a.edges()[i];
    const Edge& y = b.edges()[i];
    if (x.id != y.id || x.u != y.u || x.v != y.v) return false;
  }
  return true;
}

std::size_t CountOf(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Graph6Test, K4) {
  const MultiGraph g = ParseGraph6("C~");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(WriteGraph6(GenK4()), "C~");
  EXPECT_EQ(ParseGraph6(">>graph6<<C~\n").num_edges(), 6u);
}

TEST(Graph6Test, TwoVertices) {
  EXPECT_EQ(ParseGraph6("A_").num_edges(), 1u);
  EXPECT_EQ(ParseGraph6("A?").num_edges(), 0u);
}

TEST(Graph6Test, Malformed) {
  EXPECT_EQ(ErrorOf([] { ParseGraph6("C"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(ErrorOf([] { ParseGraph6(""); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(ErrorOf([] { ParseGraph6("C~~"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(ErrorOf([] { ParseGraph6("C\x01"); }), ErrorCode::kMalformedGraph6);
}

TEST(Graph6Test, LargeOrderRoundTrip) {
  const MultiGraph g = GenRing(18);  // 72 vertices, multi-byte order.
  const std::string text = WriteGraph6(g);
  EXPECT_EQ(text[0], '~');
  const MultiGraph back = ParseGraph6(text);
  EXPECT_EQ(back.num_vertices(), 72u);
  EXPECT_EQ(WriteGraph6(back), text);
}

TEST(Graph6Test, MultigraphsAreRejected) {
  EXPECT_EQ(ErrorOf([] { WriteGraph6(GenDipole()); }), ErrorCode::kNotSimple);
  const MultiGraph back = ParseGraphDocument(WriteGraphDocument(GenDipole()));
  EXPECT_TRUE(SameGraph(back, GenDipole()));
}

TEST(GraphDocumentTest, CorpusRoundTrip) {
  CorpusOptions options;
  options.seed_end = 10;
  for (const CorpusEntry& e : BuildCorpus(options)) {
    const std::string text = WriteGraphDocument(e.g, {{"name", e.name}, {"seed", int64_t{3}}});
    EXPECT_TRUE(SameGraph(ParseGraphDocument(text), e.g)) << e.name;
    EXPECT_TRUE(SameGraph(ParseGraphAuto(text), e.g)) << e.name;
  }
}

TEST(GraphDocumentTest, SparseIdsSurvive) {
  GraphBuilder b(GenK4());
  b.RemoveVertex(VertexId{0});
  const MultiGraph g = b.Build();
  EXPECT_TRUE(SameGraph(ParseGraphDocument(WriteGraphDocument(g)), g));
}

TEST(GraphDocumentTest, Malformed) {
  for (const char* text : {"", "{", "[]", R"({"n": 2})", R"({"n": 2, "edges": [[0, 0, 5]]})",
                           R"({"n": 2, "edges": [[0, 0]]})", R"({"n": -1, "edges": []})"}) {
    EXPECT_EQ(ErrorOf([&] { ParseGraphDocument(text); }), ErrorCode::kMalformedDocument)
        << text;
  }
}

TEST(ColoringDocumentTest, RoundTrip) {
  const MultiGraph g = GenLeaf7Pair();
  ColoringDocument doc{g, ColorGraph(g), PackingSpec::Default(), {{"variant", "Bridged"}}};
  const ColoringDocument back = ParseColoringDocument(WriteColoringDocument(doc));
  EXPECT_TRUE(SameGraph(back.graph, g));
  EXPECT_EQ(back.coloring, doc.coloring);
  EXPECT_EQ(back.spec.values(), doc.spec.values());
  EXPECT_EQ(std::get<std::string>(back.meta.at("variant")), "Bridged");
}

TEST(ColoringDocumentTest, RejectsBadAssignments) {
  const std::string base = R"({"n": 2, "edges": [[0, 0, 1]], "spec": "1,1,1,3", )";
  EXPECT_EQ(ErrorOf([&] { ParseColoringDocument(base + R"("assignment": [[0, "9z"]]})"); }),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(ErrorOf([&] { ParseColoringDocument(base + R"("assignment": [[4, "1a"]]})"); }),
            ErrorCode::kMalformedDocument);
  EXPECT_NO_THROW(ParseColoringDocument(base + R"("assignment": [[0, "3a"]]})"));
}

TEST(DotTest, LeafPairStyles) {
  const MultiGraph g = GenLeaf7Pair();
  const std::string dot = WriteDot(g, ColorGraph(g));
  EXPECT_EQ(CountOf(dot, "brown"), 2u);
  EXPECT_EQ(CountOf(dot, " -- "), g.num_edges());
  EXPECT_NE(dot.find("graph"), std::string::npos);
}

}  // namespace
}  // namespace cfp
