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

#include "gerry/path_solver.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gerry {
namespace {

struct VectorHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Depth-first search over (node, districts used, wins, label counts) with a
// memo of states already shown to fail.
class WalkSearch {
 public:
  WalkSearch(const LabeledDistrictGraph& graph, const MultiplicityQuery& query)
      : graph_(graph),
        query_(query),
        counts_(graph.num_candidates, 0) {}

  WalkResult Run() {
    WalkResult result;
    if (query_.districts < 1 || query_.min_wins < 1 || query_.cap < 0) {
      return result;
    }
    result.yes = Visit(graph_.source, 0, 0);
    if (result.yes) {
      result.intervals = path_;
      std::reverse(result.intervals.begin(), result.intervals.end());
    }
    return result;
  }

 private:
  // `used` interval nodes so far including `node`; labels of `node` are not
  // yet counted (they ride on its outgoing arcs).
  bool Visit(int node, int used, int wins) {
    if (node == graph_.sink) {
      return used == query_.districts && wins >= query_.min_wins;
    }
    key_.assign({node, used, wins});
    key_.insert(key_.end(), counts_.begin(), counts_.end());
    if (failed_.contains(key_)) return false;

    const int next_position =
        node == graph_.source ? 0 : graph_.intervals[node].end + 1;
    const int remaining = query_.districts - used;
    const bool feasible =
        graph_.ranges_from[next_position] <= remaining &&
        remaining <= graph_.num_positions - next_position;
    if (feasible) {
      for (const LabeledArc& arc : graph_.arcs[node]) {
        const int next_wins = std::min(wins + (arc.p_win ? 1 : 0),
                                       query_.min_wins);
        if (next_wins + remaining < query_.min_wins) continue;
        bool within_cap = true;
        for (int label : arc.labels) {
          if (counts_[label] >= query_.cap) within_cap = false;
        }
        if (!within_cap) continue;
        for (int label : arc.labels) ++counts_[label];
        const int next_used = arc.head == graph_.sink ? used : used + 1;
        const bool ok = Visit(arc.head, next_used, next_wins);
        for (int label : arc.labels) --counts_[label];
        if (ok) {
          if (node != graph_.source) path_.push_back(node);
          return true;
        }
      }
    }
    key_.assign({node, used, wins});
    key_.insert(key_.end(), counts_.begin(), counts_.end());
    failed_.insert(key_);
    return false;
  }

  const LabeledDistrictGraph& graph_;
  const MultiplicityQuery query_;
  std::vector<int> counts_;
  std::vector<int> key_;
  std::vector<int> path_;
  std::unordered_set<std::vector<int>, VectorHash> failed_;
};

}  // namespace

bool IsPathForest(const Instance& inst) {
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.degree(v) > 2) return false;
  }
  return true;
}

PathNumbering CanonicalPathNumbering(const Instance& inst) {
  if (!IsPathForest(inst)) {
    throw std::invalid_argument("not a path forest: some vertex has degree >= 3");
  }
  const int n = inst.num_vertices();
  PathNumbering numbering;
  std::vector<bool> placed(n, false);
  for (int v = 0; v < n; ++v) {
    if (placed[v]) continue;
    // Find both endpoints of v's path and start from the smaller one.
    std::vector<int> ends;
    for (int dir : inst.neighbors(v)) {
      int prev = v;
      int cur = dir;
      while (inst.degree(cur) == 2) {
        const auto adj = inst.neighbors(cur);
        const int next = adj[0] == prev ? adj[1] : adj[0];
        prev = cur;
        cur = next;
      }
      ends.push_back(cur);
    }
    if (inst.degree(v) < 2) ends.push_back(v);
    int cur = *std::min_element(ends.begin(), ends.end());
    const int start = static_cast<int>(numbering.order.size());
    int prev = -1;
    while (true) {
      placed[cur] = true;
      numbering.order.push_back(cur);
      int next = -1;
      for (int u : inst.neighbors(cur)) {
        if (u != prev) next = u;
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    numbering.ranges.emplace_back(start,
                                  static_cast<int>(numbering.order.size()) - 1);
  }
  return numbering;
}

LabeledDistrictGraph BuildLabeledGraph(const Instance& inst,
                                       const PathNumbering& numbering) {
  const int n = inst.num_vertices();
  const int num_candidates = inst.num_candidates();
  LabeledDistrictGraph graph;
  graph.num_positions = n;
  graph.num_candidates = num_candidates;

  // starting_at[i]: interval node ids whose interval begins at position i.
  std::vector<std::vector<int>> starting_at(n + 1);
  for (const auto& [first, last] : numbering.ranges) {
    for (int i = first; i <= last; ++i) {
      std::vector<Votes> tallies(num_candidates, 0);
      for (int j = i; j <= last; ++j) {
        const auto w = inst.weights(numbering.order[j]);
        for (int c = 0; c < num_candidates; ++c) tallies[c] += w[c];
        starting_at[i].push_back(static_cast<int>(graph.intervals.size()));
        graph.intervals.push_back({i, j, OutcomeFromTallies(inst, tallies)});
      }
    }
  }
  const int num_intervals = static_cast<int>(graph.intervals.size());
  graph.source = num_intervals;
  graph.sink = num_intervals + 1;
  graph.arcs.resize(num_intervals + 2);

  for (int id : starting_at[0]) graph.arcs[graph.source].push_back({id, false, {}});
  for (int id = 0; id < num_intervals; ++id) {
    const IntervalNode& node = graph.intervals[id];
    const bool p_win = node.outcome.p_win;
    const std::vector<int>& labels = node.outcome.labels;
    if (node.end == n - 1) {
      graph.arcs[id].push_back({graph.sink, p_win, labels});
    } else {
      for (int next : starting_at[node.end + 1]) {
        graph.arcs[id].push_back({next, p_win, labels});
      }
    }
  }

  graph.ranges_from.assign(n + 1, 0);
  for (const auto& [first, last] : numbering.ranges) {
    for (int i = 0; i <= first; ++i) ++graph.ranges_from[i];
  }
  return graph;
}

WalkResult SolveMultiplicityQuery(const LabeledDistrictGraph& graph,
                                  const MultiplicityQuery& query) {
  return WalkSearch(graph, query).Run();
}

uint64_t CountWalks(const LabeledDistrictGraph& graph, int internal) {
  if (internal < 0) return 0;
  // ways[node][j]: walks from node to the sink through j more interval nodes
  // (node itself included when it is an interval). Intervals are processed
  // from the right, which is a reverse topological order.
  const int num_intervals = static_cast<int>(graph.intervals.size());
  std::vector<std::vector<uint64_t>> ways(
      graph.num_nodes(), std::vector<uint64_t>(internal + 1, 0));
  std::vector<int> order(num_intervals);
  for (int i = 0; i < num_intervals; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.intervals[a].start > graph.intervals[b].start;
  });
  for (int id : order) {
    for (const LabeledArc& arc : graph.arcs[id]) {
      for (int j = 1; j <= internal; ++j) {
        if (arc.head == graph.sink) {
          ways[id][j] += j == 1 ? 1 : 0;
        } else {
          ways[id][j] += ways[arc.head][j - 1];
        }
      }
    }
  }
  uint64_t total = 0;
  for (const LabeledArc& arc : graph.arcs[graph.source]) {
    total += ways[arc.head][internal];
  }
  return total;
}

SolveResult SolvePathForest(const Instance& inst) {
  const PathNumbering numbering = CanonicalPathNumbering(inst);
  const int k = inst.num_districts();
  SolveResult result;
  if (k < inst.num_components() || k > inst.num_vertices()) return result;
  const LabeledDistrictGraph graph = BuildLabeledGraph(inst, numbering);
  for (int wins = k; wins >= 1; --wins) {
    const WalkResult walk =
        SolveMultiplicityQuery(graph, {k, wins, wins - 1});
    if (!walk.yes) continue;
    DistrictPartition part;
    part.assignment.resize(inst.num_vertices());
    for (int d = 0; d < static_cast<int>(walk.intervals.size()); ++d) {
      const IntervalNode& node = graph.intervals[walk.intervals[d]];
      for (int i = node.start; i <= node.end; ++i) {
        part.assignment[numbering.order[i]] = d;
      }
    }
    result.yes = true;
    result.witness = std::move(part);
    return result;
  }
  return result;
}

}  // namespace gerry
