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

#ifndef CFP_IO_H_
#define CFP_IO_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "cfp/coloring.h"
#include "cfp/graph.h"

namespace cfp {

// Free-form document metadata (generator, seed, diagnostics).
using MetaValue = std::variant<int64_t, std::string>;
using Meta = std::map<std::string, MetaValue>;

// One graph6 line (an optional ">>graph6<<" header and trailing whitespace
// are accepted). Vertices are 0..n-1. Throws Error(kMalformedGraph6) naming
// the byte offset.
MultiGraph ParseGraph6(std::string_view text);
// Vertices are numbered by ascending id. Throws Error(kNotSimple).
std::string WriteGraph6(const MultiGraph& g);

// {"n": ..., "vertices": [...], "edges": [[id, u, v], ...], "meta": {...}}.
// "vertices" is only written when the ids are not 0..n-1.
std::string WriteGraphDocument(const MultiGraph& g, const Meta& meta = {});
// Throws Error(kMalformedDocument).
MultiGraph ParseGraphDocument(std::string_view text);

struct ColoringDocument {
  MultiGraph graph;
  EdgeColoring coloring;
  PackingSpec spec = PackingSpec::Default();
  Meta meta;
};

// A graph document plus "spec" and "assignment": [[id, label], ...].
std::string WriteColoringDocument(const ColoringDocument& doc);
// Throws Error(kMalformedDocument), including for unknown labels or
// assignments to edges outside the graph.
ColoringDocument ParseColoringDocument(std::string_view text);

// A JSON document when the first non-blank character is '{', graph6
// otherwise.
MultiGraph ParseGraphAuto(std::string_view text);

// Fixed styles: 1a red solid, 1b green dashed, 1c blue dotted, 3a brown bold;
// other labels black.
std::string WriteDot(const MultiGraph& g, const EdgeColoring& coloring,
                     const PackingSpec& spec = PackingSpec::Default());

}  // namespace cfp

#endif  // CFP_IO_H_
