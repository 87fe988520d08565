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

// Branch-and-contract solver for forests with few branch vertices.
//
// Take the lowest branch vertex b and a segment S = v_1 .. v_s leaving it
// (b = v_1, inner vertices of degree two, v_s a leaf or branch vertex). In any
// partition, b's district extends along S up to some last vertex v_i. For each
// i, commit v_1 .. v_i to b's district by contracting them into b (summing
// weight vectors) and, when i < s, deleting the edge v_i v_{i+1}. Each child
// has strictly smaller summed branch degree, so the recursion bottoms out at
// path forests, which SolvePathForest decides.

#ifndef GERRY_TREE_SOLVER_H_
#define GERRY_TREE_SOLVER_H_

#include <optional>
#include <utility>
#include <vector>

#include "gerry/model.h"
#include "gerry/oracle.h"

namespace gerry {

// Sum of degrees over vertices of degree at least three.
int SummedBranchDegree(const Instance& inst);

// Vertices of degree at most one; an isolated vertex counts once.
int LeafCount(const Instance& inst);

struct Segment {
  // v_1 .. v_s along the segment; vertices.front() is the branch vertex.
  std::vector<int> vertices;
};

struct BranchPoint {
  int branch_vertex = -1;
  Segment segment;
};

// Lowest-labelled branch vertex and the segment through its smallest
// neighbour; nullopt on a path forest.
std::optional<BranchPoint> FindSegment(const Instance& inst);

struct BranchChoice {
  Segment segment;
  // b's district ends at segment.vertices[cut_index - 1]; 1 <= cut_index <= s.
  int cut_index = 1;
};

struct ContractionRecord {
  // Parent vertices merged into b, b first.
  std::vector<int> merged;
  // Parent edge deleted when cut_index < s.
  std::optional<Edge> removed_edge;
  // Child vertex of every parent vertex.
  std::vector<int> child_of_parent;

  // Lifts a child partition to the parent: b's district absorbs `merged`.
  DistrictPartition Lift(const DistrictPartition& child) const;
};

struct BranchResult {
  // nullopt when k exceeds the contracted vertex count: no partition of the
  // child exists.
  std::optional<Instance> child;
  ContractionRecord record;
};

BranchResult BranchContract(const Instance& inst, const BranchChoice& choice);

SolveResult SolveTree(const Instance& inst);

}  // namespace gerry

#endif  // GERRY_TREE_SOLVER_H_
