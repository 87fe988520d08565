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

// Exact solver for path forests.
//
// The vertices are numbered so that each path occupies a consecutive range.
// Every district of a path forest is then an interval lying inside one range,
// and a partition into k districts is a chain of k consecutive intervals
// covering [0, n). The labeled district graph has one node per such interval
// plus a source and a sink; an s-t walk with k internal nodes is exactly a
// partition. Arcs leaving an interval carry that district's opponent labels
// and a p-win mark, so the instance is satisfiable iff some walk has w p-win
// marks while no label occurs more than w - 1 times, for some w in [1, k].

#ifndef GERRY_PATH_SOLVER_H_
#define GERRY_PATH_SOLVER_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "gerry/model.h"
#include "gerry/oracle.h"

namespace gerry {

struct PathNumbering {
  // order[i] is the vertex at position i.
  std::vector<int> order;
  // Inclusive position range of each path, in numbering order.
  std::vector<std::pair<int, int>> ranges;
};

bool IsPathForest(const Instance& inst);

// Paths are ordered by their smallest vertex and each is oriented from its
// smaller endpoint. Throws std::invalid_argument if some vertex has degree
// three or more.
PathNumbering CanonicalPathNumbering(const Instance& inst);

struct LabeledArc {
  int head = 0;
  bool p_win = false;
  std::vector<int> labels;
};

struct IntervalNode {
  // Inclusive positions in the numbering.
  int start = 0;
  int end = 0;
  DistrictOutcome outcome;
};

struct LabeledDistrictGraph {
  // Nodes [0, intervals.size()) are intervals; source and sink follow.
  std::vector<IntervalNode> intervals;
  std::vector<std::vector<LabeledArc>> arcs;
  int source = 0;
  int sink = 0;
  int num_positions = 0;
  int num_candidates = 0;
  // Number of path ranges starting at or after each position (n + 1 long).
  std::vector<int> ranges_from;

  int num_nodes() const { return static_cast<int>(arcs.size()); }
};

LabeledDistrictGraph BuildLabeledGraph(const Instance& inst,
                                       const PathNumbering& numbering);

struct MultiplicityQuery {
  int districts = 1;
  int min_wins = 1;
  // Maximum occurrences of any single label; min_wins - 1 for plurality.
  int cap = 0;
};

struct WalkResult {
  bool yes = false;
  // Interval node ids along the walk, source and sink excluded.
  std::vector<int> intervals;
};

WalkResult SolveMultiplicityQuery(const LabeledDistrictGraph& graph,
                                  const MultiplicityQuery& query);

// Number of s-t walks with exactly `internal` interval nodes.
uint64_t CountWalks(const LabeledDistrictGraph& graph, int internal);

// Throws std::invalid_argument if the instance is not a path forest.
SolveResult SolvePathForest(const Instance& inst);

}  // namespace gerry

#endif  // GERRY_PATH_SOLVER_H_
