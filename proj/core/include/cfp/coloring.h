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

#ifndef CFP_COLORING_H_
#define CFP_COLORING_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfp/graph.h"

namespace cfp {

// The four labels of a (1,1,1,3)-packing edge-coloring. The numeric value is
// the class position in the default packing sequence.
enum class PackingColor : int8_t { k1a = 0, k1b = 1, k1c = 2, k3a = 3 };

inline constexpr std::array<PackingColor, 3> kOnePackingColors = {
    PackingColor::k1a, PackingColor::k1b, PackingColor::k1c};

std::string_view ColorLabel(PackingColor c);
std::optional<PackingColor> ParseColorLabel(std::string_view label);

// Non-decreasing positive sequence (s_1, ..., s_k). Class i holds edges at
// pairwise edge distance >= s_i + 1.
class PackingSpec {
 public:
  // Throws Error(kBadSpec) unless nonempty, positive and non-decreasing.
  explicit PackingSpec(std::vector<int> s);
  static PackingSpec Default() { return PackingSpec({1, 1, 1, 3}); }
  // "1,1,1,3" style. Throws Error(kBadSpec).
  static PackingSpec Parse(std::string_view text);

  const std::vector<int>& values() const { return s_; }
  int size() const { return static_cast<int>(s_.size()); }
  int operator[](int i) const { return s_[i]; }
  int max_value() const { return s_.back(); }
  // "1a", "1b", "2a", ...: the value followed by the position among equal
  // values. For the default spec this matches ColorLabel.
  std::string Label(int class_index) const;
  std::optional<int> ParseLabel(std::string_view label) const;
  std::string ToString() const;

 private:
  std::vector<int> s_;
};

// Edge id -> class index. Entries may be missing while a coloring is being
// assembled; validity against a spec is the verifier's job.
class EdgeColoring {
 public:
  void Set(EdgeId e, int class_index);
  void Set(EdgeId e, PackingColor c) { Set(e, static_cast<int>(c)); }
  void Erase(EdgeId e);

  bool Has(EdgeId e) const { return ClassOf(e).has_value(); }
  std::optional<int> ClassOf(EdgeId e) const;
  // Throws Error(kPartialColoring) when unassigned.
  PackingColor Color(EdgeId e) const;

  // Ascending by edge id.
  std::vector<std::pair<EdgeId, int>> Entries() const;
  std::size_t size() const;
  bool IsTotalOn(const MultiGraph& g) const;
  // Number of edges of g in the class.
  int CountOn(const MultiGraph& g, PackingColor c) const;
  std::vector<EdgeId> EdgesOfColor(const MultiGraph& g, PackingColor c) const;

  // Only the entries for edges of g.
  EdgeColoring RestrictTo(const MultiGraph& g) const;
  // Copies every entry of `other` over this one.
  void Merge(const EdgeColoring& other);

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<int8_t> classes_;  // Indexed by edge id; -1 when unassigned.
};

// A bijection of {1a, 1b, 1c}; 3a is always fixed.
class ColorPermutation {
 public:
  ColorPermutation() = default;
  // image[i] is where kOnePackingColors[i] goes. Must be a permutation.
  explicit ColorPermutation(std::array<PackingColor, 3> image);
  static ColorPermutation Swap(PackingColor a, PackingColor b);

  PackingColor operator()(PackingColor c) const;

 private:
  std::array<PackingColor, 3> image_ = kOnePackingColors;
};

EdgeColoring ApplyPermutation(const EdgeColoring& coloring,
                              const ColorPermutation& perm);

}  // namespace cfp

#endif  // CFP_COLORING_H_
