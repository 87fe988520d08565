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

#include "gerry/model.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gerry/union_find.h"

namespace gerry {
namespace {

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const std::string& v : violations) out << " " << v << ";";
  return out.str();
}

}  // namespace

const char* SemanticsName(Semantics mode) {
  return mode == Semantics::kStrict ? "strict" : "tiebreak";
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(JoinViolations(violations)),
      violations_(std::move(violations)) {}

RawInstance RawInstance::FromChoices(std::span<const int> choice,
                                     std::vector<Edge> edges,
                                     int num_candidates, int preferred,
                                     int num_districts, Semantics mode) {
  RawInstance raw;
  raw.num_vertices = static_cast<int>(choice.size());
  raw.edges = std::move(edges);
  raw.num_candidates = num_candidates;
  raw.preferred = preferred;
  raw.num_districts = num_districts;
  raw.mode = mode;
  raw.weights.assign(choice.size(), std::vector<Votes>(
                                        std::max(num_candidates, 0), 0));
  for (size_t v = 0; v < choice.size(); ++v) {
    if (choice[v] >= 0 && choice[v] < num_candidates) {
      raw.weights[v][choice[v]] = 1;
    }
  }
  return raw;
}

std::vector<std::string> ValidateInstance(const RawInstance& raw) {
  std::vector<std::string> errors;
  const int n = raw.num_vertices;
  if (n < 1) errors.push_back("vertex count must be at least 1");
  if (raw.num_candidates < 1) errors.push_back("need at least one candidate");
  if (raw.num_candidates >= 1 &&
      (raw.preferred < 0 || raw.preferred >= raw.num_candidates)) {
    errors.push_back("preferred candidate out of range");
  }
  if (raw.num_districts < 1) errors.push_back("k must be at least 1");
  if (n >= 1 && raw.num_districts > n) errors.push_back("k exceeds n");

  if (static_cast<int>(raw.weights.size()) != std::max(n, 0)) {
    errors.push_back("weight table has wrong vertex count");
  } else {
    for (int v = 0; v < n; ++v) {
      if (static_cast<int>(raw.weights[v].size()) != raw.num_candidates) {
        errors.push_back("weight vector of vertex " + std::to_string(v + 1) +
                         " has wrong length");
        continue;
      }
      for (Votes w : raw.weights[v]) {
        if (w < 0) {
          errors.push_back("negative weight at vertex " +
                           std::to_string(v + 1));
          break;
        }
      }
    }
  }

  bool edges_in_range = true;
  std::set<Edge> seen;
  for (const auto& [u, v] : raw.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      errors.push_back("vertex index out of range in edge (" +
                       std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                       ")");
      edges_in_range = false;
      continue;
    }
    if (u == v) {
      errors.push_back("self-loop at vertex " + std::to_string(u + 1));
      edges_in_range = false;
      continue;
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      errors.push_back("duplicate edge (" + std::to_string(u + 1) + ", " +
                       std::to_string(v + 1) + ")");
      edges_in_range = false;
    }
  }
  if (edges_in_range && n >= 1) {
    UnionFind components(n);
    for (const auto& [u, v] : raw.edges) {
      if (!components.Union(u, v)) {
        errors.push_back("cycle: edge list is not a forest");
        break;
      }
    }
  }

  if (!raw.tiebreak_order.empty()) {
    std::vector<int> sorted = raw.tiebreak_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(std::max(raw.num_candidates, 0));
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) {
      errors.push_back("tie-break order is not a permutation of candidates");
    }
  }
  return errors;
}

Instance Instance::FromRaw(RawInstance raw) {
  std::vector<std::string> errors = ValidateInstance(raw);
  if (!errors.empty()) throw ValidationError(std::move(errors));
  return Instance(std::move(raw));
}

Instance::Instance(RawInstance raw) : raw_(std::move(raw)) {
  const int n = raw_.num_vertices;
  adjacency_.resize(n);
  for (const auto& [u, v] : raw_.edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  num_components_ = n - num_edges();
  if (raw_.tiebreak_order.empty()) {
    tiebreak_order_.resize(raw_.num_candidates);
    std::iota(tiebreak_order_.begin(), tiebreak_order_.end(), 0);
  } else {
    tiebreak_order_ = raw_.tiebreak_order;
  }
}

Instance Instance::WithMode(Semantics mode) const {
  RawInstance copy = raw_;
  copy.mode = mode;
  return FromRaw(std::move(copy));
}

Instance Instance::WithDistricts(int num_districts) const {
  RawInstance copy = raw_;
  copy.num_districts = num_districts;
  return FromRaw(std::move(copy));
}

std::vector<std::vector<int>> DistrictPartition::Districts(
    int num_districts) const {
  std::vector<std::vector<int>> out(num_districts);
  for (int v = 0; v < static_cast<int>(assignment.size()); ++v) {
    const int d = assignment[v];
    if (d >= 0 && d < num_districts) out[d].push_back(v);
  }
  return out;
}

DistrictOutcome OutcomeFromTallies(const Instance& inst,
                                   std::vector<Votes> tallies) {
  DistrictOutcome out;
  out.tallies = std::move(tallies);
  const Votes best = *std::max_element(out.tallies.begin(), out.tallies.end());
  for (int c = 0; c < inst.num_candidates(); ++c) {
    if (out.tallies[c] == best) out.top.push_back(c);
  }
  for (int c : inst.tiebreak_order()) {
    if (out.tallies[c] == best) {
      out.tiebreak_winner = c;
      break;
    }
  }
  const int p = inst.preferred();
  if (inst.mode() == Semantics::kStrict) {
    out.p_win = out.top.size() == 1 && out.top[0] == p;
    for (int c : out.top) {
      if (c != p) out.labels.push_back(c);
    }
  } else {
    out.p_win = out.tiebreak_winner == p;
    if (!out.p_win) out.labels.push_back(out.tiebreak_winner);
  }
  return out;
}

DistrictOutcome ComputeDistrictOutcome(const Instance& inst,
                                       std::span<const int> members) {
  if (members.empty()) {
    throw std::invalid_argument("district outcome of an empty member set");
  }
  std::vector<Votes> tallies(inst.num_candidates(), 0);
  for (int v : members) {
    if (v < 0 || v >= inst.num_vertices()) {
      throw std::invalid_argument("district member out of range");
    }
    const auto w = inst.weights(v);
    for (int c = 0; c < inst.num_candidates(); ++c) tallies[c] += w[c];
  }
  return OutcomeFromTallies(inst, std::move(tallies));
}

Scoreboard::Scoreboard(const Instance& inst)
    : inst_(&inst), opponent_counts_(inst.num_candidates(), 0) {}

void Scoreboard::Reset() {
  preferred_wins_ = 0;
  std::fill(opponent_counts_.begin(), opponent_counts_.end(), 0);
}

void Scoreboard::Add(const DistrictOutcome& outcome) {
  if (outcome.p_win) ++preferred_wins_;
  for (int c : outcome.labels) ++opponent_counts_[c];
}

void Scoreboard::AddTallies(std::span<const Votes> tallies) {
  const int p = inst_->preferred();
  const int num_candidates = inst_->num_candidates();
  Votes best = tallies[0];
  for (int c = 1; c < num_candidates; ++c) best = std::max(best, tallies[c]);
  if (inst_->mode() == Semantics::kStrict) {
    int leaders = 0;
    for (int c = 0; c < num_candidates; ++c) {
      if (tallies[c] != best) continue;
      ++leaders;
      if (c != p) ++opponent_counts_[c];
    }
    if (leaders == 1 && tallies[p] == best) ++preferred_wins_;
  } else {
    for (int c : inst_->tiebreak_order()) {
      if (tallies[c] != best) continue;
      if (c == p) {
        ++preferred_wins_;
      } else {
        ++opponent_counts_[c];
      }
      break;
    }
  }
}

int Scoreboard::max_opponent_count() const {
  int best = 0;
  for (int c = 0; c < static_cast<int>(opponent_counts_.size()); ++c) {
    if (c != inst_->preferred()) best = std::max(best, opponent_counts_[c]);
  }
  return best;
}

std::string PartitionViolation::ToString() const {
  switch (kind) {
    case Kind::kWrongLength:
      return "assignment length differs from vertex count";
    case Kind::kDistrictOutOfRange:
      return "vertex " + std::to_string(index + 1) +
             " has district index out of range";
    case Kind::kEmptyDistrict:
      return "district " + std::to_string(index + 1) + " empty";
    case Kind::kDisconnectedDistrict:
      return "district " + std::to_string(index + 1) + " disconnected";
  }
  return "unknown violation";
}

std::vector<PartitionViolation> VerifyPartition(const Instance& inst,
                                                const DistrictPartition& part) {
  using Kind = PartitionViolation::Kind;
  std::vector<PartitionViolation> out;
  const int n = inst.num_vertices();
  const int k = inst.num_districts();
  if (static_cast<int>(part.assignment.size()) != n) {
    out.push_back({Kind::kWrongLength, 0});
    return out;
  }
  for (int v = 0; v < n; ++v) {
    if (part.assignment[v] < 0 || part.assignment[v] >= k) {
      out.push_back({Kind::kDistrictOutOfRange, v});
    }
  }
  if (!out.empty()) return out;

  // Each district is connected iff the edges internal to it join its members
  // into a single class.
  UnionFind classes(n);
  for (const auto& [u, v] : inst.edges()) {
    if (part.assignment[u] == part.assignment[v]) classes.Union(u, v);
  }
  std::vector<int> representative(k, -1);
  std::vector<bool> disconnected(k, false);
  for (int v = 0; v < n; ++v) {
    const int d = part.assignment[v];
    const int root = classes.Find(v);
    if (representative[d] == -1) {
      representative[d] = root;
    } else if (representative[d] != root) {
      disconnected[d] = true;
    }
  }
  for (int d = 0; d < k; ++d) {
    if (representative[d] == -1) {
      out.push_back({Kind::kEmptyDistrict, d});
    } else if (disconnected[d]) {
      out.push_back({Kind::kDisconnectedDistrict, d});
    }
  }
  return out;
}

std::vector<DistrictOutcome> PartitionOutcomes(const Instance& inst,
                                               const DistrictPartition& part) {
  std::vector<DistrictOutcome> out;
  for (const auto& members : part.Districts(inst.num_districts())) {
    out.push_back(ComputeDistrictOutcome(inst, members));
  }
  return out;
}

bool Evaluate(const Instance& inst, const DistrictPartition& part) {
  const auto violations = VerifyPartition(inst, part);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid partition: " +
                                violations.front().ToString());
  }
  Scoreboard board(inst);
  for (const DistrictOutcome& outcome : PartitionOutcomes(inst, part)) {
    board.Add(outcome);
  }
  return board.Satisfied();
}

}  // namespace gerry
