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

#include "cfp/verifier.h"

#include <algorithm>
#include <array>
#include <string>

#include "cfp/error.h"

namespace cfp {

std::vector<Violation> Verify(const MultiGraph& g, const EdgeColoring& coloring,
                              const PackingSpec& spec) {
  for (const Edge& e : g.edges()) {
    const auto c = coloring.ClassOf(e.id);
    if (!c) {
      throw Error(ErrorCode::kPartialColoring,
                  "edge " + std::to_string(e.id.value) + " is unassigned");
    }
    if (*c >= spec.size()) {
      throw Error(ErrorCode::kBadSpec, "edge " + std::to_string(e.id.value) +
                                           " uses class " + std::to_string(*c) +
                                           " outside the packing sequence");
    }
  }
  std::vector<Violation> out;
  for (const Edge& e : g.edges()) {
    const int c = *coloring.ClassOf(e.id);
    const int s = spec[c];
    // Edges within distance s of e touch a vertex at distance <= s - 1.
    const auto dist = VertexDistances(g, std::array{e.u, e.v}, s - 1);
    std::vector<EdgeId> seen;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      const VertexId x = g.vertices()[i];
      if (dist[i] < 0) continue;
      for (EdgeId f : g.incident(x)) {
        if (f <= e.id || coloring.ClassOf(f) != c) continue;
        seen.push_back(f);
      }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (EdgeId f : seen) {
      const Distance d = EdgeDistance(g, e.id, f);
      if (d < Distance(s + 1)) out.push_back({c, e.id, f, d, s + 1});
    }
  }
  return out;
}

const char* OracleStatusName(OracleStatus status) {
  switch (status) {
    case OracleStatus::kFeasible: return "feasible";
    case OracleStatus::kInfeasible: return "infeasible";
    case OracleStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

class Search {
 public:
  Search(const MultiGraph& g, const PackingSpec& spec,
         const OracleOptions& options)
      : g_(g), spec_(spec), options_(options), m_(g.num_edges()),
        k_(spec.size()) {
    BuildTable();
    BuildOrder();
    assigned_.assign(m_, -1);
    blocked_.assign(static_cast<std::size_t>(k_) * m_, 0);
    used_.assign(k_, 0);
  }

  OracleResult Run() {
    OracleResult result;
    const bool found = m_ == 0 || Descend(0);
    result.nodes = nodes_;
    if (exhausted_) {
      result.status = OracleStatus::kBudgetExceeded;
    } else if (found) {
      EdgeColoring coloring;
      for (int i = 0; i < m_; ++i) coloring.Set(g_.edges()[i].id, assigned_[i]);
      if (!Verify(g_, coloring, spec_).empty()) {
        throw Error(ErrorCode::kColoringFailed, "oracle produced an invalid coloring");
      }
      result.status = OracleStatus::kFeasible;
      result.coloring = std::move(coloring);
    } else {
      result.status = OracleStatus::kInfeasible;
    }
    return result;
  }

 private:
  // near_[c][i]: edges j != i with distance(i, j) <= s_c.
  void BuildTable() {
    const int cap = spec_.max_value();
    std::vector<std::vector<std::pair<int, int>>> within(m_);
    for (int i = 0; i < m_; ++i) {
      const Edge& e = g_.edges()[i];
      const auto dist = VertexDistances(g_, std::array{e.u, e.v}, cap - 1);
      for (int j = 0; j < m_; ++j) {
        if (j == i) continue;
        const Edge& f = g_.edges()[j];
        const int du = dist[g_.VertexIndex(f.u)];
        const int dv = dist[g_.VertexIndex(f.v)];
        const int d = du < 0 ? dv : (dv < 0 ? du : std::min(du, dv));
        if (d >= 0) within[i].emplace_back(j, d + 1);
      }
    }
    near_.assign(k_, std::vector<std::vector<int>>(m_));
    for (int c = 0; c < k_; ++c) {
      for (int i = 0; i < m_; ++i) {
        for (const auto& [j, d] : within[i]) {
          if (d <= spec_[c]) near_[c][i].push_back(j);
        }
      }
    }
  }

  // Greedy: next edge has the most conflicts with already placed edges,
  // then the most conflicts overall, then the smallest id.
  void BuildOrder() {
    const auto& widest = near_[k_ - 1];
    std::vector<int> placed_links(m_, 0);
    std::vector<bool> placed(m_, false);
    for (int step = 0; step < m_; ++step) {
      int best = -1;
      for (int i = 0; i < m_; ++i) {
        if (placed[i]) continue;
        if (best < 0 || placed_links[i] > placed_links[best] ||
            (placed_links[i] == placed_links[best] &&
             widest[i].size() > widest[best].size())) {
          best = i;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (int j : widest[best]) ++placed_links[j];
    }
  }

  int& Blocked(int c, int i) { return blocked_[static_cast<std::size_t>(c) * m_ + i]; }

  bool ClassOpen(int c) const {
    if (!options_.symmetry_breaking || c == 0) return true;
    return spec_[c] != spec_[c - 1] || used_[c - 1] > 0;
  }

  bool HasOption(int i) {
    for (int c = 0; c < k_; ++c) {
      if (Blocked(c, i) == 0) return true;
    }
    return false;
  }

  bool Descend(int depth) {
    if (depth == m_) return true;
    const int i = order_[depth];
    for (int c = 0; c < k_; ++c) {
      if (Blocked(c, i) > 0 || !ClassOpen(c)) continue;
      if (++nodes_ > options_.node_budget) {
        exhausted_ = true;
        return false;
      }
      assigned_[i] = c;
      ++used_[c];
      for (int j : near_[c][i]) ++Blocked(c, j);
      bool ok = true;
      for (int j : near_[c][i]) {
        if (assigned_[j] < 0 && !HasOption(j)) {
          ok = false;
          break;
        }
      }
      if (ok && Descend(depth + 1)) return true;
      for (int j : near_[c][i]) --Blocked(c, j);
      --used_[c];
      assigned_[i] = -1;
      if (exhausted_) return false;
      // An unused class in a symmetric group is interchangeable with the
      // next unused one.
      if (options_.symmetry_breaking && used_[c] == 0) {
        while (c + 1 < k_ && spec_[c + 1] == spec_[c]) ++c;
      }
    }
    return false;
  }

  const MultiGraph& g_;
  const PackingSpec& spec_;
  OracleOptions options_;
  int m_;
  int k_;
  std::vector<std::vector<std::vector<int>>> near_;
  std::vector<int> order_;
  std::vector<int> assigned_;
  std::vector<int> blocked_;
  std::vector<int> used_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

OracleResult OracleColor(const MultiGraph& g, const PackingSpec& spec,
                         const OracleOptions& options) {
  return Search(g, spec, options).Run();
}

}  // namespace cfp
