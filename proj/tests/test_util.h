// Copyright 2026 The Gerry Authors
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

// Test-only reference implementations. Nothing here calls into the solver
// paths it is used to check.

#ifndef GERRY_TESTS_TEST_UTIL_H_
#define GERRY_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "gerry/model.h"

namespace gerry::testing {

inline std::vector<Edge> PathEdges(int n, int offset = 0) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(offset + i, offset + i + 1);
  return edges;
}

inline std::vector<Edge> StarEdges(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return edges;
}

inline Instance UnitInstance(const std::vector<int>& choice,
                             std::vector<Edge> edges, int num_candidates,
                             int k, Semantics mode = Semantics::kStrict,
                             int preferred = 0) {
  return Instance::FromRaw(RawInstance::FromChoices(
      choice, std::move(edges), num_candidates, preferred, k, mode));
}

// The plurality condition read straight off the definitions: per district,
// recompute the tallies and top set; count p's wins against every other
// candidate's leads (kStrict) or tie-break wins (kTiebreak).
inline bool ReferenceEvaluate(const Instance& inst,
                              const std::vector<int>& assignment) {
  const int k = inst.num_districts();
  const int num_candidates = inst.num_candidates();
  std::vector<std::vector<Votes>> tallies(k, std::vector<Votes>(num_candidates));
  for (int v = 0; v < inst.num_vertices(); ++v) {
    for (int c = 0; c < num_candidates; ++c) {
      tallies[assignment[v]][c] += inst.weights(v)[c];
    }
  }
  std::vector<int> credit(num_candidates, 0);
  int p_wins = 0;
  for (const auto& t : tallies) {
    const Votes best = *std::max_element(t.begin(), t.end());
    std::set<int> top;
    for (int c = 0; c < num_candidates; ++c) {
      if (t[c] == best) top.insert(c);
    }
    if (inst.mode() == Semantics::kStrict) {
      if (top == std::set<int>{inst.preferred()}) ++p_wins;
      for (int c : top) ++credit[c];
    } else {
      int winner = -1;
      for (int c : inst.tiebreak_order()) {
        if (top.count(c)) {
          winner = c;
          break;
        }
      }
      if (winner == inst.preferred()) ++p_wins;
      ++credit[winner];
    }
  }
  for (int c = 0; c < num_candidates; ++c) {
    if (c != inst.preferred() && credit[c] >= p_wins) return false;
  }
  return p_wins > 0;
}

inline bool InducedConnected(const Instance& inst, const std::vector<int>& block) {
  if (block.empty()) return false;
  std::set<int> members(block.begin(), block.end());
  std::set<int> seen = {block.front()};
  std::queue<int> queue;
  queue.push(block.front());
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int u : inst.neighbors(v)) {
      if (members.count(u) && seen.insert(u).second) queue.push(u);
    }
  }
  return seen.size() == members.size();
}

// Every partition of the vertex set into exactly k blocks (restricted growth
// strings), kept when each block induces a connected subgraph. Exponential;
// meant for n <= 9.
inline std::vector<std::vector<int>> ReferencePartitions(const Instance& inst) {
  const int n = inst.num_vertices();
  const int k = inst.num_districts();
  std::vector<std::vector<int>> out;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> grow = [&](int v, int used) {
    if (n - v < k - used) return;
    if (v == n) {
      if (used != k) return;
      std::vector<std::vector<int>> blocks(k);
      for (int u = 0; u < n; ++u) blocks[label[u]].push_back(u);
      for (const auto& b : blocks) {
        if (!InducedConnected(inst, b)) return;
      }
      out.push_back(label);
      return;
    }
    for (int d = 0; d <= std::min(used, k - 1); ++d) {
      label[v] = d;
      grow(v + 1, std::max(used, d + 1));
    }
  };
  grow(0, 0);
  return out;
}

inline bool ReferenceDecision(const Instance& inst) {
  for (const auto& assignment : ReferencePartitions(inst)) {
    if (ReferenceEvaluate(inst, assignment)) return true;
  }
  return false;
}

}  // namespace gerry::testing

#endif  // GERRY_TESTS_TEST_UTIL_H_
