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

#ifndef CFP_FAMILIES_H_
#define CFP_FAMILIES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cfp/graph.h"
#include "cfp/structure.h"

namespace cfp {

// k >= 2 diamonds in a ring. Throws Error(kBadCount) for k < 2.
MultiGraph GenRing(int k);
MultiGraph GenK4();
// Kneser graph on the 2-subsets of {0..4}; vertex i is the i-th subset in
// lexicographic order.
MultiGraph GenPetersen();
// Petersen with vertex 0 replaced by a triangle.
MultiGraph GenTietze();

// Vertices v=0, u=1, w=2, s=3, b=4, z1=5, z2=6; edges in the order
// uv, vw, uw, us, wb, sz1, sz2, bz1, bz2, z1z2.
MultiGraph GenLeaf7();
// Two leaf7 copies (vertices 0..6 and 7..13) joined by the bridge 0-7,
// which has the largest edge id.
MultiGraph GenLeaf7Pair();
// A triangle on 0, 1, 2 with a leaf7 copy bridged to each corner.
MultiGraph GenK3Star();
// Two vertices joined by three parallel edges.
MultiGraph GenDipole();

struct SubstitutionPlan {
  MultiGraph h;
  std::map<EdgeId, int> strings;  // H edge -> diamond count.
};

// Throws Error(kInvalidPlan) for a bad plan.
SubstitutionResult GenSubstituted(const SubstitutionPlan& plan);

struct RandomOptions {
  int h_vertices = 6;          // Even, >= 2.
  int string_percent = 25;     // Chance that an H edge becomes a string.
  int max_string_length = 3;
  bool bridged = false;
  // Bridged only: number of components; 0 picks 2..6 from the seed.
  int components = 0;
};

// Seeded mt19937_64; bounded draws use plain modulo so that outputs do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  int Uniform(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[Uniform(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Random 2-edge-connected loopless cubic multigraph: a fixed-point-free
// permutation's cycles plus a random perfect matching, resampled until
// 2-edge-connected. Throws Error(kGenerationFailed) after 1000 attempts.
MultiGraph RandomTwoEdgeConnectedCubic(Rng& rng, int n);

// Non-bridged random instance with its ground-truth decomposition.
SubstitutionResult GenRandomSubstituted(uint64_t seed,
                                        const RandomOptions& options = {});

// Claw-free connected cubic simple graph; with options.bridged, components
// (K3, diamond, or larger pieces with pendant triangles) are joined along a
// random tree. Throws Error(kGenerationFailed) if the result fails the
// recognition checks.
MultiGraph GenRandomClawFreeCubic(uint64_t seed, const RandomOptions& options = {});

// Non-isomorphic connected loopless cubic multigraphs on 2..max_vertices
// vertices, optionally only the 2-edge-connected ones. Throws
// Error(kTooLarge) above 10 vertices.
std::vector<MultiGraph> EnumerateCubicMultigraphs(int max_vertices,
                                                  bool two_edge_connected_only);

struct CorpusEntry {
  std::string name;
  std::string family;  // ring, named, substituted, random, bridged.
  MultiGraph g;
  std::optional<OumDecomposition> decomposition;  // Ground truth, if known.
};

struct CorpusOptions {
  uint64_t seed_begin = 1;
  uint64_t seed_end = 150;  // Inclusive.
  std::vector<int> sizes = {4, 6, 8, 10};  // H orders for random instances.
};

// Rings k = 2..10, K4, leaf7-pair, K3 star, every 2-edge-connected H on <= 8
// vertices with 0 to 3 strings of length 1 to 3, and for every seed one
// random substituted and one bridged graph.
std::vector<CorpusEntry> BuildCorpus(const CorpusOptions& options = {});

}  // namespace cfp

#endif  // CFP_FAMILIES_H_
