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

#include "gerry/oracle.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace gerry {
namespace {

void CheckBudget(const Instance& inst, const OracleOptions& options) {
  const uint64_t count = PartitionCount(inst);
  if (count > options.max_partitions) {
    throw ResourceLimitError(
        "oracle refuses instance: " + std::to_string(count) +
        " partitions exceed the ceiling of " +
        std::to_string(options.max_partitions));
  }
}

int CutSize(const Instance& inst) {
  return inst.num_districts() - inst.num_components();
}

// Runs `task(first_edge)` for every feasible first cut edge on up to `jobs`
// threads. Tasks are handed out in increasing order.
template <typename Task>
void RunFirstEdgeTasks(const Instance& inst, int jobs, Task&& task) {
  const int last = inst.num_edges() - CutSize(inst);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int f = next++; f <= last; f = next++) task(f);
  };
  const int threads = std::clamp(jobs, 1, std::max(last + 1, 1));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

uint64_t BinomialSaturating(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(result);
}

uint64_t PartitionCount(const Instance& inst) {
  return BinomialSaturating(inst.num_edges(), CutSize(inst));
}

PartitionEnumerator::PartitionEnumerator(const Instance& inst)
    : PartitionEnumerator(inst, -1) {}

PartitionEnumerator::PartitionEnumerator(const Instance& inst, int first_edge)
    : inst_(&inst), board_(inst) {
  const int n = inst.num_vertices();
  const int num_candidates = inst.num_candidates();
  entry_.assign(n, -1);
  exit_.assign(n, -1);
  subtree_.assign(static_cast<size_t>(n) * num_candidates, 0);
  std::vector<int> parent(n, -1);
  std::vector<int> order;
  order.reserve(n);

  int clock = 0;
  std::vector<std::pair<int, size_t>> dfs;
  for (int root = 0; root < n; ++root) {
    if (entry_[root] != -1) continue;
    roots_.push_back(root);
    entry_[root] = clock++;
    dfs.emplace_back(root, 0);
    while (!dfs.empty()) {
      auto& [v, next_child] = dfs.back();
      const auto adj = inst.neighbors(v);
      if (next_child < adj.size()) {
        const int u = adj[next_child++];
        if (u == parent[v]) continue;
        parent[u] = v;
        entry_[u] = clock++;
        dfs.emplace_back(u, 0);
      } else {
        exit_[v] = clock;
        order.push_back(v);
        dfs.pop_back();
      }
    }
  }
  for (int v : order) {
    Votes* row = &subtree_[static_cast<size_t>(v) * num_candidates];
    const auto w = inst.weights(v);
    for (int c = 0; c < num_candidates; ++c) row[c] += w[c];
    if (parent[v] != -1) {
      Votes* up = &subtree_[static_cast<size_t>(parent[v]) * num_candidates];
      for (int c = 0; c < num_candidates; ++c) up[c] += row[c];
    }
  }
  for (const auto& [u, v] : inst.edges()) {
    lower_endpoint_.push_back(parent[v] == u ? v : u);
  }
  tallies_.assign(static_cast<size_t>(inst.num_districts()) * num_candidates,
                  0);
  Reset(first_edge);
}

void PartitionEnumerator::Reset(int first_edge) {
  first_edge_ = first_edge;
  num_cuts_ = CutSize(*inst_);
  const int m = inst_->num_edges();
  started_ = false;
  exhausted_ = num_cuts_ < 0 || inst_->num_districts() > inst_->num_vertices();
  if (first_edge >= 0 && (num_cuts_ < 1 || first_edge > m - num_cuts_)) {
    exhausted_ = true;
  }
  if (exhausted_) return;
  const int start = first_edge >= 0 ? first_edge : 0;
  cut_.resize(num_cuts_);
  for (int i = 0; i < num_cuts_; ++i) cut_[i] = start + i;
}

bool PartitionEnumerator::Next() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    ComputeDistricts();
    return true;
  }
  const int m = inst_->num_edges();
  const int lowest = first_edge_ >= 0 ? 1 : 0;
  for (int i = num_cuts_ - 1; i >= lowest; --i) {
    if (cut_[i] < m - num_cuts_ + i) {
      ++cut_[i];
      for (int j = i + 1; j < num_cuts_; ++j) cut_[j] = cut_[j - 1] + 1;
      ComputeDistricts();
      return true;
    }
  }
  exhausted_ = true;
  return false;
}

void PartitionEnumerator::ComputeDistricts() {
  const int num_candidates = inst_->num_candidates();
  heads_ = roots_;
  for (int e : cut_) heads_.push_back(lower_endpoint_[e]);
  std::sort(heads_.begin(), heads_.end(),
            [&](int a, int b) { return entry_[a] < entry_[b]; });

  // A district is its head's subtree minus the subtrees of the heads nested
  // directly below it.
  stack_.clear();
  for (int i = 0; i < static_cast<int>(heads_.size()); ++i) {
    const int h = heads_[i];
    while (!stack_.empty() && exit_[heads_[stack_.back()]] <= entry_[h]) {
      stack_.pop_back();
    }
    const Votes* sub = &subtree_[static_cast<size_t>(h) * num_candidates];
    Votes* mine = &tallies_[static_cast<size_t>(i) * num_candidates];
    std::copy(sub, sub + num_candidates, mine);
    if (!stack_.empty()) {
      Votes* up = &tallies_[static_cast<size_t>(stack_.back()) * num_candidates];
      for (int c = 0; c < num_candidates; ++c) up[c] -= sub[c];
    }
    stack_.push_back(i);
  }
}

int PartitionEnumerator::DistrictOf(int v) const {
  for (int i = static_cast<int>(heads_.size()) - 1; i >= 0; --i) {
    const int h = heads_[i];
    if (entry_[h] <= entry_[v] && entry_[v] < exit_[h]) return i;
  }
  return -1;
}

std::span<const Votes> PartitionEnumerator::DistrictTallies(
    int district) const {
  const size_t width = inst_->num_candidates();
  return std::span<const Votes>(tallies_).subspan(district * width, width);
}

bool PartitionEnumerator::Satisfied() {
  board_.Reset();
  for (int d = 0; d < static_cast<int>(heads_.size()); ++d) {
    board_.AddTallies(DistrictTallies(d));
  }
  return board_.Satisfied();
}

DistrictPartition PartitionEnumerator::Materialize() const {
  const int n = inst_->num_vertices();
  std::vector<int> renumber(heads_.size(), -1);
  int next = 0;
  DistrictPartition part;
  part.assignment.resize(n);
  for (int v = 0; v < n; ++v) {
    int& d = renumber[DistrictOf(v)];
    if (d == -1) d = next++;
    part.assignment[v] = d;
  }
  return part;
}

std::vector<DistrictPartition> EnumeratePartitions(
    const Instance& inst, const OracleOptions& options) {
  CheckBudget(inst, options);
  std::vector<DistrictPartition> out;
  PartitionEnumerator it(inst);
  while (it.Next()) out.push_back(it.Materialize());
  return out;
}

SolveResult SolveOracle(const Instance& inst, const OracleOptions& options) {
  CheckBudget(inst, options);
  SolveResult result;
  if (options.jobs <= 1 || CutSize(inst) < 1) {
    PartitionEnumerator it(inst);
    while (it.Next()) {
      if (it.Satisfied()) {
        result.yes = true;
        result.witness = it.Materialize();
        break;
      }
    }
    return result;
  }

  // The first satisfying cut overall is the first one found under the
  // smallest successful first edge.
  std::atomic<int> best_first{std::numeric_limits<int>::max()};
  std::mutex mu;
  std::optional<DistrictPartition> best;
  RunFirstEdgeTasks(inst, options.jobs, [&](int f) {
    if (f > best_first.load()) return;
    PartitionEnumerator it(inst, f);
    while (it.Next()) {
      if (f > best_first.load()) return;
      if (!it.Satisfied()) continue;
      std::lock_guard<std::mutex> lock(mu);
      if (f < best_first.load()) {
        best_first = f;
        best = it.Materialize();
      }
      return;
    }
  });
  result.yes = best.has_value();
  result.witness = std::move(best);
  return result;
}

uint64_t CountSatisfying(const Instance& inst, const OracleOptions& options) {
  CheckBudget(inst, options);
  if (options.jobs <= 1 || CutSize(inst) < 1) {
    uint64_t count = 0;
    PartitionEnumerator it(inst);
    while (it.Next()) count += it.Satisfied() ? 1 : 0;
    return count;
  }
  std::atomic<uint64_t> total{0};
  RunFirstEdgeTasks(inst, options.jobs, [&](int f) {
    uint64_t count = 0;
    PartitionEnumerator it(inst, f);
    while (it.Next()) count += it.Satisfied() ? 1 : 0;
    total += count;
  });
  return total.load();
}

uint64_t ForEachSatisfying(
    const Instance& inst,
    const std::function<bool(PartitionEnumerator&)>& visit,
    const OracleOptions& options) {
  CheckBudget(inst, options);
  uint64_t count = 0;
  PartitionEnumerator it(inst);
  while (it.Next()) {
    if (!it.Satisfied()) continue;
    ++count;
    if (!visit(it)) break;
  }
  return count;
}

}  // namespace gerry
