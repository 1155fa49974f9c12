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

#ifndef CFP_VERIFIER_H_
#define CFP_VERIFIER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "cfp/coloring.h"
#include "cfp/graph.h"

namespace cfp {

// Two same-class edges closer than the class allows.
struct Violation {
  int class_index = 0;
  EdgeId first;   // first < second
  EdgeId second;
  Distance distance = Distance::Infinite();
  int required = 0;  // s_i + 1

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty iff valid. Violations are ordered by (first, second).
// Throws Error(kPartialColoring) if an edge of g is unassigned and
// Error(kBadSpec) if a class index is outside the spec.
std::vector<Violation> Verify(const MultiGraph& g, const EdgeColoring& coloring,
                              const PackingSpec& spec = PackingSpec::Default());

inline bool IsValidColoring(const MultiGraph& g, const EdgeColoring& coloring,
                            const PackingSpec& spec = PackingSpec::Default()) {
  return Verify(g, coloring, spec).empty();
}

enum class OracleStatus { kFeasible, kInfeasible, kBudgetExceeded };

const char* OracleStatusName(OracleStatus status);

struct OracleOptions {
  int64_t node_budget = 100'000'000;
  // Classes with equal s are opened in order. Disabling it is only useful
  // for cross-checking.
  bool symmetry_breaking = true;
};

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  std::optional<EdgeColoring> coloring;  // Set iff feasible.
  int64_t nodes = 0;
};

// Exhaustive search for an S-packing edge-coloring of g.
OracleResult OracleColor(const MultiGraph& g,
                         const PackingSpec& spec = PackingSpec::Default(),
                         const OracleOptions& options = {});

}  // namespace cfp

#endif  // CFP_VERIFIER_H_
