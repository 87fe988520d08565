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

#include "gerry/tree_solver.h"

#include <algorithm>
#include <stdexcept>

#include "gerry/path_solver.h"

namespace gerry {

int SummedBranchDegree(const Instance& inst) {
  int total = 0;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.degree(v) >= 3) total += inst.degree(v);
  }
  return total;
}

int LeafCount(const Instance& inst) {
  int leaves = 0;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.degree(v) <= 1) ++leaves;
  }
  return leaves;
}

std::optional<BranchPoint> FindSegment(const Instance& inst) {
  for (int b = 0; b < inst.num_vertices(); ++b) {
    if (inst.degree(b) < 3) continue;
    BranchPoint point;
    point.branch_vertex = b;
    point.segment.vertices.push_back(b);
    int prev = b;
    int cur = inst.neighbors(b).front();
    point.segment.vertices.push_back(cur);
    while (inst.degree(cur) == 2) {
      const auto adj = inst.neighbors(cur);
      const int next = adj[0] == prev ? adj[1] : adj[0];
      prev = cur;
      cur = next;
      point.segment.vertices.push_back(cur);
    }
    return point;
  }
  return std::nullopt;
}

DistrictPartition ContractionRecord::Lift(
    const DistrictPartition& child) const {
  DistrictPartition parent;
  parent.assignment.reserve(child_of_parent.size());
  for (int c : child_of_parent) parent.assignment.push_back(child.assignment[c]);
  return parent;
}

BranchResult BranchContract(const Instance& inst, const BranchChoice& choice) {
  const std::vector<int>& seg = choice.segment.vertices;
  const int s = static_cast<int>(seg.size());
  if (s < 2 || choice.cut_index < 1 || choice.cut_index > s) {
    throw std::invalid_argument("branch choice out of range");
  }
  const int n = inst.num_vertices();
  const int b = seg.front();

  ContractionRecord record;
  record.merged.assign(seg.begin(), seg.begin() + choice.cut_index);
  std::vector<bool> merged(n, false);
  for (int v : record.merged) merged[v] = true;
  if (choice.cut_index < s) {
    record.removed_edge = Edge{seg[choice.cut_index - 1], seg[choice.cut_index]};
  }

  // Surviving vertices keep their relative order; merged ones map onto b.
  record.child_of_parent.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!merged[v] || v == b) record.child_of_parent[v] = next++;
  }
  for (int v : record.merged) record.child_of_parent[v] = record.child_of_parent[b];

  const RawInstance& parent = inst.raw();
  RawInstance child;
  child.num_vertices = next;
  child.num_candidates = parent.num_candidates;
  child.preferred = parent.preferred;
  child.num_districts = parent.num_districts;
  child.mode = parent.mode;
  child.tiebreak_order = parent.tiebreak_order;
  child.weights.assign(next, std::vector<Votes>(parent.num_candidates, 0));
  for (int v = 0; v < n; ++v) {
    auto& row = child.weights[record.child_of_parent[v]];
    for (int c = 0; c < parent.num_candidates; ++c) row[c] += parent.weights[v][c];
  }
  for (const auto& [u, v] : parent.edges) {
    if (merged[u] && merged[v]) continue;
    if (record.removed_edge &&
        std::minmax(u, v) == std::minmax(record.removed_edge->first,
                                         record.removed_edge->second)) {
      continue;
    }
    child.edges.emplace_back(record.child_of_parent[u],
                             record.child_of_parent[v]);
  }
  BranchResult result;
  if (child.num_districts <= child.num_vertices) {
    result.child = Instance::FromRaw(std::move(child));
  }
  result.record = std::move(record);
  return result;
}

namespace {

SolveResult SolveRecursive(const Instance& inst, int districts) {
  SolveResult none;
  if (districts > inst.num_vertices()) return none;
  const std::optional<BranchPoint> point = FindSegment(inst);
  if (!point) return SolvePathForest(inst);
  const int s = static_cast<int>(point->segment.vertices.size());
  for (int i = 1; i <= s; ++i) {
    BranchResult branch = BranchContract(inst, {point->segment, i});
    if (!branch.child) continue;
    SolveResult sub = SolveRecursive(*branch.child, districts);
    if (!sub.yes) continue;
    sub.witness = branch.record.Lift(*sub.witness);
    return sub;
  }
  return none;
}

}  // namespace

SolveResult SolveTree(const Instance& inst) {
  return SolveRecursive(inst, inst.num_districts());
}

}  // namespace gerry
