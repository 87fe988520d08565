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

// Exhaustive solver for forests. On a forest with c components, removing any
// k - c edges leaves exactly k trees, and every district-partition into k
// districts arises from exactly one such cut. Enumerating cuts therefore
// enumerates partitions, C(#edges, k - c) of them.
//
// Cuts are visited in lexicographic order of their sorted edge indices (the
// instance's edge order), which fixes the witness returned by SolveOracle.

#ifndef GERRY_ORACLE_H_
#define GERRY_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gerry/model.h"

namespace gerry {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  // Refuse instances with more candidate partitions than this.
  uint64_t max_partitions = 100'000'000;
  // Worker threads for SolveOracle and CountSatisfying.
  int jobs = 1;
};

struct SolveResult {
  bool yes = false;
  std::optional<DistrictPartition> witness;
};

// C(n, r), saturating at UINT64_MAX.
uint64_t BinomialSaturating(int n, int r);

// Number of district-partitions of the instance's forest into k districts.
uint64_t PartitionCount(const Instance& inst);

// Walks the edge-cut selections of one instance. Not thread-safe; use one
// enumerator per thread.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const Instance& inst);
  // Restricts the walk to cuts whose smallest edge index is `first_edge`.
  PartitionEnumerator(const Instance& inst, int first_edge);

  // Advances to the next partition. Returns false once exhausted; the first
  // call positions on the first partition.
  bool Next();

  // Sorted indices of the cut edges of the current partition.
  std::span<const int> cut() const { return cut_; }

  // Districts of the current partition are numbered [0, k) internally.
  int DistrictOf(int v) const;
  std::span<const Votes> DistrictTallies(int district) const;
  bool Satisfied();

  // Districts renumbered by first appearance in vertex order.
  DistrictPartition Materialize() const;

 private:
  void Reset(int first_edge);
  void ComputeDistricts();

  const Instance* inst_;
  int num_cuts_ = 0;
  int first_edge_ = -1;
  bool started_ = false;
  bool exhausted_ = false;
  std::vector<int> cut_;

  // Rooted forest: each component is rooted at its smallest vertex.
  std::vector<int> roots_;
  std::vector<int> entry_;
  std::vector<int> exit_;
  std::vector<int> lower_endpoint_;  // per edge, the endpoint farther from root
  std::vector<Votes> subtree_;       // n x C subtree tallies

  // Current partition: district heads sorted by entry time, their tallies.
  std::vector<int> heads_;
  std::vector<Votes> tallies_;
  std::vector<int> stack_;
  Scoreboard board_;
};

// Every district-partition, in canonical cut order. Throws
// ResourceLimitError beyond options.max_partitions.
std::vector<DistrictPartition> EnumeratePartitions(
    const Instance& inst, const OracleOptions& options = {});

// YES iff some partition satisfies the instance. The witness is the first
// satisfying partition in canonical cut order regardless of options.jobs.
SolveResult SolveOracle(const Instance& inst,
                        const OracleOptions& options = {});

uint64_t CountSatisfying(const Instance& inst,
                         const OracleOptions& options = {});

// Calls `visit` on every satisfying partition in canonical order; stops early
// when it returns false. Returns the number of satisfying partitions seen.
uint64_t ForEachSatisfying(
    const Instance& inst,
    const std::function<bool(PartitionEnumerator&)>& visit,
    const OracleOptions& options = {});

}  // namespace gerry

#endif  // GERRY_ORACLE_H_
