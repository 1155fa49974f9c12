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

#include "cfp/coloring.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cfp/error.h"

namespace cfp {

std::string_view ColorLabel(PackingColor c) {
  switch (c) {
    case PackingColor::k1a: return "1a";
    case PackingColor::k1b: return "1b";
    case PackingColor::k1c: return "1c";
    case PackingColor::k3a: return "3a";
  }
  return "?";
}

std::optional<PackingColor> ParseColorLabel(std::string_view label) {
  for (PackingColor c : {PackingColor::k1a, PackingColor::k1b,
                         PackingColor::k1c, PackingColor::k3a}) {
    if (ColorLabel(c) == label) return c;
  }
  return std::nullopt;
}

PackingSpec::PackingSpec(std::vector<int> s) : s_(std::move(s)) {
  if (s_.empty()) throw Error(ErrorCode::kBadSpec, "empty packing sequence");
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i] < 1 || (i > 0 && s_[i] < s_[i - 1])) {
      throw Error(ErrorCode::kBadSpec,
                  "packing sequence must be positive and non-decreasing");
    }
  }
  if (s_.size() > 64) throw Error(ErrorCode::kBadSpec, "too many classes");
}

PackingSpec PackingSpec::Parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kBadSpec, "bad packing sequence '" +
                                           std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return PackingSpec(std::move(values));
}

std::string PackingSpec::Label(int class_index) const {
  int rank = 0;
  for (int i = class_index - 1; i >= 0 && s_[i] == s_[class_index]; --i) ++rank;
  return std::to_string(s_[class_index]) + static_cast<char>('a' + rank);
}

std::optional<int> PackingSpec::ParseLabel(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (Label(i) == label) return i;
  }
  return std::nullopt;
}

std::string PackingSpec::ToString() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < s_.size(); ++i) out << (i ? "," : "") << s_[i];
  return out.str();
}

void EdgeColoring::Set(EdgeId e, int class_index) {
  if (e.value >= static_cast<int>(classes_.size())) {
    classes_.resize(e.value + 1, -1);
  }
  classes_[e.value] = static_cast<int8_t>(class_index);
}

void EdgeColoring::Erase(EdgeId e) {
  if (e.value >= 0 && e.value < static_cast<int>(classes_.size())) {
    classes_[e.value] = -1;
  }
  while (!classes_.empty() && classes_.back() < 0) classes_.pop_back();
}

std::optional<int> EdgeColoring::ClassOf(EdgeId e) const {
  if (e.value < 0 || e.value >= static_cast<int>(classes_.size()) ||
      classes_[e.value] < 0) {
    return std::nullopt;
  }
  return classes_[e.value];
}

PackingColor EdgeColoring::Color(EdgeId e) const {
  const auto c = ClassOf(e);
  if (!c) {
    throw Error(ErrorCode::kPartialColoring,
                "edge " + std::to_string(e.value) + " is unassigned");
  }
  return static_cast<PackingColor>(*c);
}

std::vector<std::pair<EdgeId, int>> EdgeColoring::Entries() const {
  std::vector<std::pair<EdgeId, int>> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] >= 0) out.emplace_back(EdgeId{static_cast<int32_t>(i)}, classes_[i]);
  }
  return out;
}

std::size_t EdgeColoring::size() const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin(), classes_.end(), [](int8_t c) { return c >= 0; }));
}

bool EdgeColoring::IsTotalOn(const MultiGraph& g) const {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [this](const Edge& e) { return Has(e.id); });
}

int EdgeColoring::CountOn(const MultiGraph& g, PackingColor c) const {
  return static_cast<int>(EdgesOfColor(g, c).size());
}

std::vector<EdgeId> EdgeColoring::EdgesOfColor(const MultiGraph& g,
                                               PackingColor c) const {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (ClassOf(e.id) == static_cast<int>(c)) out.push_back(e.id);
  }
  return out;
}

EdgeColoring EdgeColoring::RestrictTo(const MultiGraph& g) const {
  EdgeColoring out;
  for (const Edge& e : g.edges()) {
    if (const auto c = ClassOf(e.id)) out.Set(e.id, *c);
  }
  return out;
}

void EdgeColoring::Merge(const EdgeColoring& other) {
  for (const auto& [e, c] : other.Entries()) Set(e, c);
}

ColorPermutation::ColorPermutation(std::array<PackingColor, 3> image)
    : image_(image) {
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != kOnePackingColors) {
    throw Error(ErrorCode::kBadSpec, "not a permutation of {1a, 1b, 1c}");
  }
}

ColorPermutation ColorPermutation::Swap(PackingColor a, PackingColor b) {
  std::array<PackingColor, 3> image = kOnePackingColors;
  std::swap(image[static_cast<int>(a)], image[static_cast<int>(b)]);
  return ColorPermutation(image);
}

PackingColor ColorPermutation::operator()(PackingColor c) const {
  return c == PackingColor::k3a ? c : image_[static_cast<int>(c)];
}

EdgeColoring ApplyPermutation(const EdgeColoring& coloring,
                              const ColorPermutation& perm) {
  EdgeColoring out;
  for (const auto& [e, c] : coloring.Entries()) {
    out.Set(e, c <= 3 ? static_cast<int>(perm(static_cast<PackingColor>(c))) : c);
  }
  return out;
}

}  // namespace cfp
