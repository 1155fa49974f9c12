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

#include "cfp/matching.h"

#include <algorithm>
#include <set>
#include <string>

#include "cfp/error.h"

namespace cfp {
namespace {

class MatchingSearch {
 public:
  MatchingSearch(const MultiGraph& h, std::span<const EdgeId> forbidden,
                 const std::function<bool(const std::vector<EdgeId>&)>& visit,
                 std::size_t limit)
      : h_(h),
        visit_(visit),
        limit_(limit),
        matched_(h.num_vertices(), false),
        options_(h.num_vertices()) {
    const std::set<EdgeId> banned(forbidden.begin(), forbidden.end());
    for (std::size_t i = 0; i < h.num_vertices(); ++i) {
      for (EdgeId e : h.incident(h.vertices()[i])) {
        if (!banned.contains(e)) options_[i].push_back(e);
      }
    }
  }

  std::size_t Run() {
    if (h_.num_vertices() % 2 == 0) Search();
    return found_;
  }

 private:
  int Available(int index) const {
    int count = 0;
    for (EdgeId e : options_[index]) {
      if (!matched_[h_.VertexIndex(h_.edge(e).Other(h_.vertices()[index]))]) {
        ++count;
      }
    }
    return count;
  }

  // Every connected piece of the unmatched subgraph must have even order.
  bool ParityOk() const {
    const std::size_t n = h_.num_vertices();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (matched_[s] || seen[s]) continue;
      int size = 0;
      std::vector<int> stack{static_cast<int>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        ++size;
        for (EdgeId e : options_[x]) {
          const int y = h_.VertexIndex(h_.edge(e).Other(h_.vertices()[x]));
          if (!matched_[y] && !seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      if (size % 2 != 0) return false;
    }
    return true;
  }

  // Returns false once the search must stop.
  bool Search() {
    int pick = -1;
    int pick_count = 0;
    for (std::size_t i = 0; i < h_.num_vertices(); ++i) {
      if (matched_[i]) continue;
      const int count = Available(static_cast<int>(i));
      if (count == 0) return true;
      if (pick < 0 || (count == 1 && pick_count > 1)) {
        pick = static_cast<int>(i);
        pick_count = count;
      }
    }
    if (pick < 0) {
      std::vector<EdgeId> matching = chosen_;
      std::sort(matching.begin(), matching.end());
      ++found_;
      return visit_(matching) && found_ < limit_;
    }
    if (pick_count > 1 && !ParityOk()) return true;
    const VertexId v = h_.vertices()[pick];
    for (EdgeId e : options_[pick]) {
      const int other = h_.VertexIndex(h_.edge(e).Other(v));
      if (matched_[other]) continue;
      matched_[pick] = matched_[other] = true;
      chosen_.push_back(e);
      const bool go_on = Search();
      chosen_.pop_back();
      matched_[pick] = matched_[other] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const MultiGraph& h_;
  const std::function<bool(const std::vector<EdgeId>&)>& visit_;
  std::size_t limit_;
  std::vector<bool> matched_;
  std::vector<std::vector<EdgeId>> options_;
  std::vector<EdgeId> chosen_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t ForEachPerfectMatching(
    const MultiGraph& h, std::span<const EdgeId> forbidden,
    const std::function<bool(const std::vector<EdgeId>&)>& visit,
    std::size_t limit) {
  if (limit == 0) return 0;
  return MatchingSearch(h, forbidden, visit, limit).Run();
}

std::optional<std::vector<EdgeId>> PerfectMatchingAvoiding(
    const MultiGraph& h, std::span<const EdgeId> forbidden) {
  std::optional<std::vector<EdgeId>> out;
  ForEachPerfectMatching(
      h, forbidden,
      [&out](const std::vector<EdgeId>& m) {
        out = m;
        return false;
      },
      1);
  return out;
}

TwoFactor TwoFactorFromMatching(const MultiGraph& h,
                                const std::vector<EdgeId>& matching) {
  const std::set<EdgeId> in_matching(matching.begin(), matching.end());
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<EdgeId>> cycle_edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (EdgeId e : h.incident(h.vertices()[i])) {
      if (!in_matching.contains(e)) cycle_edges[i].push_back(e);
    }
    if (cycle_edges[i].size() != 2) {
      throw Error(ErrorCode::kPlesnikViolated,
                  "complement of the matching is not 2-regular at vertex " +
                      std::to_string(h.vertices()[i].value));
    }
  }
  TwoFactor factor;
  factor.complement.assign(in_matching.begin(), in_matching.end());
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    FactorCycle cycle;
    const VertexId v0 = h.vertices()[start];
    auto [e1, e2] = std::pair(cycle_edges[start][0], cycle_edges[start][1]);
    const VertexId n1 = h.edge(e1).Other(v0);
    const VertexId n2 = h.edge(e2).Other(v0);
    if (n2 < n1 || (n1 == n2 && e2 < e1)) std::swap(e1, e2);
    VertexId v = v0;
    EdgeId e = e1;
    do {
      visited[h.VertexIndex(v)] = true;
      cycle.vertices.push_back(v);
      cycle.edges.push_back(e);
      v = h.edge(e).Other(v);
      const auto& pair = cycle_edges[h.VertexIndex(v)];
      e = pair[0] == e ? pair[1] : pair[0];
    } while (v != v0);
    factor.cycles.push_back(std::move(cycle));
  }
  return factor;
}

TwoFactor TwoFactorContaining(const MultiGraph& h,
                              std::span<const EdgeId> required) {
  const auto matching = PerfectMatchingAvoiding(h, required);
  if (!matching) {
    throw Error(ErrorCode::kPlesnikViolated,
                "no perfect matching avoids the required edges");
  }
  return TwoFactorFromMatching(h, *matching);
}

}  // namespace cfp
