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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cfp/error.h"
#include "cfp/recognition.h"
#include "cfp/verifier.h"

namespace cfp {
namespace {

constexpr PackingColor k1a = PackingColor::k1a;
constexpr PackingColor k1b = PackingColor::k1b;
constexpr PackingColor k1c = PackingColor::k1c;
constexpr PackingColor k3a = PackingColor::k3a;

// Matchings tried per graph, and candidate colorings tried per component.
constexpr int kMatchingLimit = 4;
constexpr int kCandidateLimit = 64;

void CountBacktrack(ColorerDiagnostics* diag) {
  if (diag != nullptr) ++diag->backtracks;
}

VertexId Port(const OumDecomposition& d, EdgeId h_edge, VertexId h_vertex) {
  const Edge& e = d.h.edge(h_edge);
  const EdgeRealization& real = d.realization_of.at(h_edge);
  return e.u == h_vertex ? real.end_u : real.end_v;
}

EdgeId OrderKey(const EdgeRealization& real) {
  return real.plain ? *real.plain : real.string->connectors.front();
}

// Triangle edge x_j y_j at H vertex h, where the matching edge leaves
// through the third vertex.
EdgeId Chord(const OumDecomposition& d, VertexId h, EdgeId matching_edge) {
  const SubstitutedTriangle& tri = d.triangle_of.at(h);
  const VertexId port = Port(d, matching_edge, h);
  for (int i = 0; i < 3; ++i) {
    if (tri.vertices[i] == port) return tri.edges[i];
  }
  throw Error(ErrorCode::kNotDecomposable, "port outside its triangle");
}

PackingColor OtherOf1a1b(PackingColor c) { return c == k1a ? k1b : k1a; }

std::vector<std::vector<EdgeId>> Matchings(const MultiGraph& h,
                                           std::span<const EdgeId> forbidden) {
  std::vector<std::vector<EdgeId>> out;
  ForEachPerfectMatching(
      h, forbidden,
      [&out](const std::vector<EdgeId>& m) {
        out.push_back(m);
        return true;
      },
      kMatchingLimit);
  return out;
}

bool NoThreeAAtDegreeTwo(const MultiGraph& g, const EdgeColoring& c) {
  for (VertexId v : g.vertices()) {
    if (g.Degree(v) != 2) continue;
    for (EdgeId e : g.incident(v)) {
      if (c.ClassOf(e) == static_cast<int>(k3a)) return false;
    }
  }
  return true;
}

EdgeId SingleEdge(const MultiGraph& g, VertexId a, VertexId b) {
  const auto between = g.EdgesBetween(a, b);
  if (between.size() != 1) {
    throw Error(ErrorCode::kClaimViolation, "claim: expected a single edge");
  }
  return between.front();
}

PackingColor MissingOneColor(const MultiGraph& component, VertexId v,
                             const EdgeColoring& c) {
  std::set<PackingColor> present;
  for (EdgeId e : component.incident(v)) present.insert(c.Color(e));
  std::vector<PackingColor> missing;
  for (PackingColor x : kOnePackingColors) {
    if (!present.count(x)) missing.push_back(x);
  }
  if (present.count(k3a) || missing.size() != 1) {
    throw Error(ErrorCode::kColoringFailed,
                "degree-2 vertex " + std::to_string(v.value) +
                    " does not miss exactly one 1-color");
  }
  return missing.front();
}

EdgeColoring ColorK3(const MultiGraph& c) {
  EdgeColoring out;
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    out.Set(c.edges()[i].id, kOnePackingColors[i]);
  }
  return out;
}

EdgeColoring ColorDiamondComponent(const MultiGraph& c) {
  std::vector<VertexId> internal, external;
  for (VertexId v : c.vertices()) {
    (c.Degree(v) == 3 ? internal : external).push_back(v);
  }
  EdgeColoring out;
  out.Set(SingleEdge(c, internal[0], internal[1]), k1c);
  out.Set(SingleEdge(c, external[0], internal[0]), k1a);
  out.Set(SingleEdge(c, external[1], internal[1]), k1a);
  out.Set(SingleEdge(c, external[0], internal[1]), k1b);
  out.Set(SingleEdge(c, external[1], internal[0]), k1b);
  return out;
}

// Odd r: color the tilde graph with s1b1 anchored, then route the path
// s1 u1 v1 w1 b1 so that 3a lands on the side farther from existing 3a edges.
EdgeColoring ColorOddComponent(const MultiGraph& gi,
                               const ComponentBoundary& boundary,
                               const TildeConstruction& tilde,
                               ColorerDiagnostics* diag) {
  const BoundaryVertex& bv = boundary.degree2.front();
  const EdgeId su = SingleEdge(gi, bv.s, bv.u);
  const EdgeId uv = SingleEdge(gi, bv.u, bv.v);
  const EdgeId vw = SingleEdge(gi, bv.v, bv.w);
  const EdgeId uw = SingleEdge(gi, bv.u, bv.w);
  const EdgeId wb = SingleEdge(gi, bv.w, bv.b);
  std::optional<EdgeColoring> result;
  int tried = 0;
  ForEachAnchoredColoring(
      tilde.tilde, *tilde.added_sb,
      [&](const EdgeColoring& anchored) {
        const EdgeColoring base = anchored.RestrictTo(gi);
        const std::vector<EdgeId> three_a = base.EdgesOfColor(gi, k3a);
        auto nearest = [&](EdgeId e) {
          Distance best = Distance::Infinite();
          for (EdgeId f : three_a) best = std::min(best, EdgeDistance(gi, e, f));
          return best;
        };
        std::vector<std::pair<Distance, EdgeId>> sides = {{nearest(wb), wb},
                                                          {nearest(su), su}};
        // Ties keep the b side first.
        std::stable_sort(sides.begin(), sides.end(), [](const auto& a, const auto& b) {
          return a.first > b.first;
        });
        for (const auto& [dist, target] : sides) {
          EdgeColoring c = base;
          c.Set(uw, k1c);
          if (target == wb) {
            c.Set(su, k1a);
            c.Set(uv, k1b);
            c.Set(vw, k1a);
            c.Set(wb, k3a);
          } else {
            c.Set(wb, k1a);
            c.Set(vw, k1b);
            c.Set(uv, k1a);
            c.Set(su, k3a);
          }
          if (c.IsTotalOn(gi) && Verify(gi, c).empty() &&
              NoThreeAAtDegreeTwo(gi, c)) {
            result = std::move(c);
            return false;
          }
          CountBacktrack(diag);
        }
        return ++tried < kCandidateLimit;
      },
      diag);
  if (!result) {
    throw Error(ErrorCode::kColoringFailed,
                "no candidate coloring verified on an odd component");
  }
  return *result;
}

}  // namespace

EdgeColoring ColorK4(const MultiGraph& g) {
  if (g.num_vertices() != 4 || g.num_edges() != 6 || !IsCubic(g) ||
      !g.IsSimple()) {
    throw Error(ErrorCode::kNotK4, "graph is not K4");
  }
  EdgeColoring out;
  int next = 0;
  for (const Edge& e : g.edges()) {
    if (out.Has(e.id)) continue;
    for (const Edge& f : g.edges()) {
      if (!f.Touches(e.u) && !f.Touches(e.v)) {
        out.Set(e.id, kOnePackingColors[next]);
        out.Set(f.id, kOnePackingColors[next]);
      }
    }
    ++next;
  }
  return out;
}

EdgeColoring ColorRing(const MultiGraph& g, int k) {
  const auto size = DetectRingOfDiamonds(g);
  if (!size || *size != k) {
    throw Error(ErrorCode::kNotRing,
                "graph is not a ring of " + std::to_string(k) + " diamonds");
  }
  EdgeColoring out;
  for (const Diamond& dm : FindDiamonds(g)) {
    out.Set(dm.internal_edge, k1c);
    for (EdgeId e : dm.matchings[0]) out.Set(e, k1a);
    for (EdgeId e : dm.matchings[1]) out.Set(e, k1b);
  }
  for (const Edge& e : g.edges()) {
    if (!out.Has(e.id)) out.Set(e.id, k1c);
  }
  return out;
}

ExpandedCycle ExpandCycle(const OumDecomposition& d, const FactorCycle& cycle) {
  const int m = static_cast<int>(cycle.size());
  ExpandedCycle out;
  std::optional<EdgeId> best_key;
  for (int j = 0; j < m; ++j) {
    const VertexId h = cycle.vertices[j];
    const EdgeId prev = cycle.edges[(j - 1 + m) % m];
    const EdgeId next = cycle.edges[j];
    const SubstitutedTriangle& tri = d.triangle_of.at(h);
    const VertexId x = Port(d, prev, h);
    const VertexId y = Port(d, next, h);
    VertexId third = tri.vertices[0];
    for (VertexId t : tri.vertices) {
      if (t != x && t != y) third = t;
    }
    const EdgeRealization& real = d.realization_of.at(next);
    out.slots.push_back({x, third, tri.EdgeBetween(x, third), std::nullopt});
    out.slots.push_back({third, y, tri.EdgeBetween(third, y), std::nullopt});
    out.slots.push_back({y, Port(d, next, cycle.vertices[(j + 1) % m]),
                         real.plain, next});
    const EdgeId key = OrderKey(real);
    if (!best_key || key < *best_key) {
      best_key = key;
      out.canonical_connector = 3 * j + 2;
    }
  }
  return out;
}

std::vector<PackingColor> ColorCycle(const ExpandedCycle& cycle,
                                     const CycleChoice& choice) {
  const int n = static_cast<int>(cycle.slots.size());
  std::vector<PackingColor> out(n);
  const PackingColor first = choice.flip ? k1b : k1a;
  const PackingColor second = OtherOf1a1b(first);
  if (cycle.m() % 2 == 0) {
    if (choice.three_a_slot >= 0) {
      throw Error(ErrorCode::kBadAnchor, "even cycles take no 3a edge");
    }
    for (int i = 0; i < n; ++i) {
      const int offset = (i - cycle.canonical_connector + n) % n;
      out[i] = offset % 2 == 0 ? first : second;
    }
    return out;
  }
  const int t =
      choice.three_a_slot < 0 ? cycle.canonical_connector : choice.three_a_slot;
  if (t >= n || t % 3 != 2) {
    throw Error(ErrorCode::kBadAnchor,
                "3a slot " + std::to_string(t) + " is not a connector");
  }
  out[t] = k3a;
  for (int k = 1; k < n; ++k) out[(t + k) % n] = (k - 1) % 2 == 0 ? first : second;
  return out;
}

EdgeColoring ColorFromTwoFactor(const MultiGraph& g, const OumDecomposition& d,
                               const TwoFactor& factor,
                               const std::vector<CycleChoice>& choices,
                               StringEnd three_a_end) {
  EdgeColoring out;
  for (std::size_t ci = 0; ci < factor.cycles.size(); ++ci) {
    const ExpandedCycle ex = ExpandCycle(d, factor.cycles[ci]);
    const std::vector<PackingColor> colors =
        ColorCycle(ex, ci < choices.size() ? choices[ci] : CycleChoice{});
    const int n = static_cast<int>(ex.slots.size());
    for (int i = 0; i < n; ++i) {
      const CycleSlot& slot = ex.slots[i];
      if (slot.edge) {
        out.Set(*slot.edge, colors[i]);
        continue;
      }
      const DiamondString& string = *d.realization_of.at(*slot.h_edge).string;
      StringContext ctx;
      switch (colors[i]) {
        case PackingColor::k1a: ctx.type = StringType::kType2_1; break;
        case PackingColor::k1b: ctx.type = StringType::kType2_2; break;
        case PackingColor::k3a: {
          ctx.type = StringType::kType2_3;
          ctx.three_a_end = three_a_end;
          const VertexId plain_end = three_a_end == StringEnd::kLeft
                                         ? string.attach_right
                                         : string.attach_left;
          const PackingColor beside = plain_end == slot.from
                                          ? colors[(i - 1 + n) % n]
                                          : colors[(i + 1) % n];
          ctx.fill = OtherOf1a1b(beside);
          break;
        }
        default:
          throw Error(ErrorCode::kBadContext, "cycle connector colored 1c");
      }
      out.Merge(ColorString(string, ctx));
    }
  }
  for (EdgeId he : factor.complement) {
    const EdgeRealization& real = d.realization_of.at(he);
    if (real.plain) {
      out.Set(*real.plain, k1c);
    } else {
      out.Merge(ColorString(*real.string, {StringType::kType1}));
    }
    const Edge& e = d.h.edge(he);
    out.Set(Chord(d, e.u, he), k1c);
    out.Set(Chord(d, e.v, he), k1c);
  }
  if (!out.IsTotalOn(g)) {
    throw Error(ErrorCode::kColoringFailed, "substituted coloring is partial");
  }
  return out;
}

EdgeColoring ColorString(const DiamondString& string, const StringContext& ctx) {
  PackingColor m0 = k1a, m1 = k1b, rest = k1c;
  switch (ctx.type) {
    case StringType::kType1: break;
    case StringType::kType2_1: m0 = k1b; m1 = k1c; rest = k1a; break;
    case StringType::kType2_2: m0 = k1a; m1 = k1c; rest = k1b; break;
    case StringType::kType2_3:
      if (ctx.fill != k1a && ctx.fill != k1b) {
        throw Error(ErrorCode::kBadContext, "Type 2.3 fill must be 1a or 1b");
      }
      m0 = k1c;
      m1 = OtherOf1a1b(ctx.fill);
      rest = ctx.fill;
      break;
  }
  EdgeColoring out;
  for (const Diamond& dm : string.diamonds) {
    out.Set(dm.internal_edge, rest);
    for (EdgeId e : dm.matchings[0]) out.Set(e, m0);
    for (EdgeId e : dm.matchings[1]) out.Set(e, m1);
  }
  for (EdgeId e : string.connectors) out.Set(e, rest);
  if (ctx.type == StringType::kType2_3) {
    out.Set(ctx.three_a_end == StringEnd::kLeft ? string.connectors.front()
                                                : string.connectors.back(),
            k3a);
  }
  return out;
}

EdgeColoring Color2ec(const MultiGraph& g, ColorerDiagnostics* diag) {
  const OumDecomposition d = OumDecompose(g);
  if (diag != nullptr) diag->variant = std::string(OumKindName(d.kind));
  if (d.kind == OumKind::kK4) return ColorK4(g);
  if (d.kind == OumKind::kRingOfDiamonds) return ColorRing(g, d.ring_size);
  for (const auto& matching : Matchings(d.h, {})) {
    const TwoFactor factor = TwoFactorFromMatching(d.h, matching);
    for (int rot = 0; rot < 3; ++rot) {
      for (bool flip : {false, true}) {
        for (StringEnd end : {StringEnd::kLeft, StringEnd::kRight}) {
          std::vector<CycleChoice> choices(factor.cycles.size());
          for (std::size_t ci = 0; ci < choices.size(); ++ci) {
            choices[ci].flip = flip;
            const int m = static_cast<int>(factor.cycles[ci].size());
            if (m % 2 == 1) {
              const int canonical =
                  ExpandCycle(d, factor.cycles[ci]).canonical_connector;
              choices[ci].three_a_slot = (canonical + 3 * rot) % (3 * m);
            }
          }
          EdgeColoring c = ColorFromTwoFactor(g, d, factor, choices, end);
          if (Verify(g, c).empty()) return c;
          CountBacktrack(diag);
        }
      }
    }
  }
  throw Error(ErrorCode::kColoringFailed, "no candidate coloring verified");
}

int ForEachAnchoredColoring(
    const MultiGraph& g, EdgeId anchor,
    const std::function<bool(const EdgeColoring&)>& visit,
    ColorerDiagnostics* diag) {
  const Edge anchor_edge = g.edge(anchor);
  const OumDecomposition d = OumDecompose(g);
  int visited = 0;
  bool stopped = false;
  // False once the caller has had enough.
  auto emit = [&](const EdgeColoring& c) {
    bool ok = c.Color(anchor) == k1a;
    for (VertexId x : {anchor_edge.u, anchor_edge.v}) {
      for (EdgeId e : g.incident(x)) ok = ok && c.Color(e) != k3a;
    }
    if (!ok || !Verify(g, c).empty()) {
      CountBacktrack(diag);
      return true;
    }
    ++visited;
    stopped = !visit(c);
    return !stopped;
  };
  if (d.kind != OumKind::kSubstituted) {
    const EdgeColoring base =
        d.kind == OumKind::kK4 ? ColorK4(g) : ColorRing(g, d.ring_size);
    const PackingColor own = base.Color(anchor);
    const EdgeColoring c = ApplyPermutation(base, ColorPermutation::Swap(own, k1a));
    if (emit(c)) emit(ApplyPermutation(c, ColorPermutation::Swap(k1b, k1c)));
    return visited;
  }
  if (OnTriangle(g, anchor)) {
    throw Error(ErrorCode::kAnchorOnTriangle,
                "anchor " + std::to_string(anchor.value) + " lies on a triangle");
  }
  const auto he = d.HEdgeContaining(anchor);
  if (!he) throw Error(ErrorCode::kBadAnchor, "anchor outside every realization");
  const std::array<EdgeId, 1> forbidden = {*he};
  for (const auto& matching : Matchings(d.h, forbidden)) {
    const TwoFactor factor = TwoFactorFromMatching(d.h, matching);
    std::size_t home = 0;
    for (std::size_t ci = 0; ci < factor.cycles.size(); ++ci) {
      const auto& edges = factor.cycles[ci].edges;
      if (std::find(edges.begin(), edges.end(), *he) != edges.end()) home = ci;
    }
    const ExpandedCycle ex = ExpandCycle(d, factor.cycles[home]);
    int slot = 0;
    for (int i = 0; i < static_cast<int>(ex.slots.size()); ++i) {
      if (ex.slots[i].h_edge == *he) slot = i;
    }
    std::vector<CycleChoice> candidates;
    const int m = ex.m();
    for (int r = 0; r < (m % 2 == 1 ? m : 1); ++r) {
      for (bool flip : {false, true}) {
        CycleChoice choice;
        choice.flip = flip;
        if (m % 2 == 1) {
          // Start right before the anchor so that it opens the alternation.
          choice.three_a_slot = (slot - 3 + 3 * (m - r) + 3 * m) % (3 * m);
        }
        if (ColorCycle(ex, choice)[slot] == k1a) candidates.push_back(choice);
      }
    }
    for (const CycleChoice& choice : candidates) {
      for (StringEnd end : {StringEnd::kLeft, StringEnd::kRight}) {
        std::vector<CycleChoice> choices(factor.cycles.size());
        choices[home] = choice;
        if (!emit(ColorFromTwoFactor(g, d, factor, choices, end))) return visited;
      }
    }
  }
  return visited;
}

EdgeColoring Color2ecAnchored(const MultiGraph& g, EdgeId anchor) {
  std::optional<EdgeColoring> first;
  ForEachAnchoredColoring(g, anchor, [&first](const EdgeColoring& c) {
    first = c;
    return false;
  });
  if (!first) {
    throw Error(ErrorCode::kColoringFailed, "no anchored coloring verified");
  }
  return *first;
}

EdgeColoring ColorComponent(const MultiGraph& component,
                            const ComponentBoundary& boundary,
                            ColorerDiagnostics* diag) {
  switch (ClassifyComponent(component)) {
    case ComponentClass::kK3: return ColorK3(component);
    case ComponentClass::kDiamond: return ColorDiamondComponent(component);
    case ComponentClass::kBig: break;
  }
  const TildeConstruction tilde = BuildTilde(component, boundary);
  if (tilde.odd) return ColorOddComponent(component, boundary, tilde, diag);
  EdgeColoring c = Color2ec(tilde.tilde, diag).RestrictTo(component);
  if (!Verify(component, c).empty() || !NoThreeAAtDegreeTwo(component, c)) {
    throw Error(ErrorCode::kColoringFailed,
                "restricted coloring fails on an even component");
  }
  return c;
}

EdgeColoring ColorGraph(const MultiGraph& g, ColorerDiagnostics* diag) {
  if (!IsCubic(g)) throw Error(ErrorCode::kNotCubic, "graph is not cubic");
  if (!g.IsSimple()) throw Error(ErrorCode::kNotSimple, "graph has parallel edges");
  if (!IsConnected(g)) throw Error(ErrorCode::kNotConnected, "graph is disconnected");
  if (const auto claw = FindClaw(g)) {
    throw Error(ErrorCode::kNotClawFree,
                "claw centered at vertex " + std::to_string(claw->center.value));
  }
  if (FindBridges(g).empty()) {
    EdgeColoring c = Color2ec(g, diag);
    if (!Verify(g, c).empty()) {
      throw Error(ErrorCode::kColoringFailed, "final coloring rejected");
    }
    return c;
  }
  const BridgeDecomposition bd = BridgeDecompose(g);
  const int count = static_cast<int>(bd.components.size());
  if (diag != nullptr) {
    diag->variant = "Bridged";
    diag->components = count;
  }
  std::vector<EdgeColoring> parts(count);
  for (int i = 0; i < count; ++i) {
    const MultiGraph& c = bd.components[i];
    ComponentBoundary boundary;
    if (ClassifyComponent(c) == ComponentClass::kBig) {
      std::optional<VertexId> up;
      if (bd.up_edge[i]) up = bd.up_edge[i]->p;
      boundary = ComputeComponentBoundary(c, up);
    }
    parts[i] = ColorComponent(c, boundary, diag);
  }
  EdgeColoring out;
  for (int i : bd.bfs_order) {
    if (const auto& up = bd.up_edge[i]) {
      const PackingColor at_q =
          MissingOneColor(bd.components[up->parent], up->q, parts[up->parent]);
      const PackingColor at_p = MissingOneColor(bd.components[i], up->p, parts[i]);
      parts[i] = ApplyPermutation(parts[i], ColorPermutation::Swap(at_p, at_q));
      out.Set(up->bridge, at_q);
    }
    out.Merge(parts[i]);
  }
  if (!Verify(g, out).empty()) {
    throw Error(ErrorCode::kColoringFailed, "final coloring rejected");
  }
  return out;
}

}  // namespace cfp
