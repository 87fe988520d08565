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

#include "gerry/reductions.h"

#include <algorithm>
#include <stdexcept>

namespace gerry {
namespace {

std::string Indexed(const std::string& name, int i) {
  return name + "_" + std::to_string(i);
}

// Accumulates a unit-weight tree vertex by vertex.
class TreeBuilder {
 public:
  explicit TreeBuilder(int num_candidates) : num_candidates_(num_candidates) {}

  int Add(int candidate, std::string role, int parent = -1) {
    const int v = static_cast<int>(roles_.size());
    roles_.push_back(std::move(role));
    choice_.push_back(candidate);
    if (parent >= 0) edges_.emplace_back(parent, v);
    return v;
  }

  Instance Build(int num_districts) const {
    return Instance::FromRaw(RawInstance::FromChoices(
        choice_, edges_, num_candidates_, kPreferredCandidate, num_districts,
        Semantics::kStrict));
  }

  std::vector<std::string> TakeRoles() { return std::move(roles_); }

 private:
  int num_candidates_;
  std::vector<int> choice_;
  std::vector<Edge> edges_;
  std::vector<std::string> roles_;
};

std::vector<int> PadCover(const SetCoverInstance& sc, std::vector<int> cover) {
  std::sort(cover.begin(), cover.end());
  if (std::adjacent_find(cover.begin(), cover.end()) != cover.end()) {
    throw std::invalid_argument("cover repeats a set");
  }
  if (static_cast<int>(cover.size()) > sc.budget) {
    throw std::invalid_argument("cover exceeds the budget t");
  }
  if (!IsCover(sc, cover)) {
    throw std::invalid_argument("not a feasible set cover");
  }
  for (int i = 0; static_cast<int>(cover.size()) < sc.budget; ++i) {
    if (!std::binary_search(cover.begin(), cover.end(), i)) {
      cover.insert(std::lower_bound(cover.begin(), cover.end(), i), i);
    }
  }
  return cover;
}

std::vector<std::string> CandidateRoles(int num_elements, int num_last,
                                        const std::string& last_name) {
  std::vector<std::string> roles = {"p", "q"};
  for (int j = 1; j <= num_elements; ++j) roles.push_back(Indexed("a", j));
  for (int i = 1; i <= num_last; ++i) roles.push_back(Indexed(last_name, i));
  return roles;
}

}  // namespace

ReductionArtifact ReduceDepth2(const SetCoverInstance& sc, int min_frequency) {
  CheckSetCover(sc);
  const SetCoverInstance padded = EqualizeFrequencies(sc, min_frequency);
  const int n = padded.num_elements;
  const int m = padded.num_sets();
  const int d = padded.Frequencies().front();
  const int q = kSecondCandidate;
  auto element_candidate = [](int j) { return 2 + j; };
  auto set_candidate = [n](int i) { return 2 + n + i; };

  TreeBuilder tree(n + m + 2);
  Depth2Layout layout;
  layout.frequency = d;
  const int r = tree.Add(kPreferredCandidate, "r");
  for (int i = 0; i < d; ++i) {
    layout.weight_inner.push_back(tree.Add(kPreferredCandidate, Indexed("w", i + 1), r));
    layout.weight_outer.push_back(tree.Add(q, Indexed("w'", i + 1), layout.weight_inner.back()));
  }
  for (int i = 0; i < m; ++i) {
    layout.set_inner.push_back(tree.Add(set_candidate(i), Indexed("s", i + 1), r));
    layout.set_outer.push_back(tree.Add(set_candidate(i), Indexed("s'", i + 1), layout.set_inner.back()));
  }
  layout.element_vertices.resize(n);
  for (int j = 0; j < n; ++j) {
    int l = 0;
    for (int i = 0; i < m; ++i) {
      if (!std::binary_search(padded.sets[i].begin(), padded.sets[i].end(), j)) {
        continue;
      }
      ++l;
      layout.element_vertices[j].push_back(tree.Add(
          element_candidate(j),
          "v_" + std::to_string(l) + "^" + std::to_string(j + 1),
          layout.set_inner[i]));
    }
  }

  ReductionArtifact art{ReductionKind::kDepth2, padded,
                        tree.Build(padded.budget + 3), tree.TakeRoles(),
                        CandidateRoles(n, m, "b"), std::move(layout), {}};
  return art;
}

ReductionArtifact ReduceSubstar(const SetCoverInstance& sc) {
  CheckSetCover(sc);
  const int n = sc.num_elements;
  const int m = sc.num_sets();
  const int t = sc.budget;
  const int q = kSecondCandidate;
  auto element_candidate = [](int j) { return 2 + j; };

  TreeBuilder tree(n + t + 2);
  SubstarLayout layout;
  const int r = tree.Add(q, "r");

  layout.c1 = tree.Add(kPreferredCandidate, "c_1", r);
  layout.c2 = tree.Add(kPreferredCandidate, "c_2", layout.c1);
  int tail = layout.c2;
  for (int j = 0; j < n; ++j) {
    tail = tree.Add(element_candidate(j), Indexed("u", j + 1), tail);
    layout.u.push_back(tail);
  }

  tail = r;
  for (int i = 0; i + 1 < t; ++i) {
    tail = tree.Add(q, Indexed("w", i + 1), tail);
    layout.w.push_back(tail);
  }

  for (int s = 0; s < t; ++s) {
    const std::string prefix = "b" + std::to_string(s + 1) + ":";
    const int branch_candidate = 2 + n + s;
    std::vector<int> branch;
    std::vector<int> xs;
    tail = r;
    auto append = [&](int candidate, const std::string& role) {
      tail = tree.Add(candidate, prefix + role, tail);
      branch.push_back(tail);
    };
    auto element_role = [](int i, int j) {
      return "v_" + std::to_string(i) + "^" + std::to_string(j + 1);
    };
    for (int j = 0; j < n; ++j) append(element_candidate(j), element_role(0, j));
    for (int i = 0; i < m; ++i) {
      const auto& set = sc.sets[i];
      for (int j = 0; j < n; ++j) {
        if (!std::binary_search(set.begin(), set.end(), j)) {
          append(element_candidate(j), element_role(i + 1, j));
        }
      }
      append(q, Indexed("x", i + 1));
      xs.push_back(tail);
      for (int j = 0; j < n; ++j) {
        if (std::binary_search(set.begin(), set.end(), j)) {
          append(element_candidate(j), element_role(i + 1, j));
        }
      }
    }
    for (int i = 0; i <= m; ++i) append(branch_candidate, Indexed("y", i));
    layout.branches.push_back(std::move(branch));
    layout.x_vertices.push_back(std::move(xs));
  }

  ReductionArtifact art{ReductionKind::kSubstar, sc, tree.Build(t + 4),
                        tree.TakeRoles(), CandidateRoles(n, t, "b"),
                        {}, std::move(layout)};
  return art;
}

DistrictPartition WitnessFromCoverDepth2(const ReductionArtifact& art,
                                         std::vector<int> cover) {
  if (art.kind != ReductionKind::kDepth2) {
    throw std::invalid_argument("artifact is not a depth-2 reduction");
  }
  cover = PadCover(art.source, std::move(cover));
  const Depth2Layout& layout = art.depth2;
  const Instance& inst = art.instance;

  // District 0 holds the root and everything not placed elsewhere.
  DistrictPartition part;
  part.assignment.assign(inst.num_vertices(), 0);
  part.assignment[layout.weight_inner[0]] = 1;
  part.assignment[layout.weight_outer[0]] = 2;
  for (int slot = 0; slot < static_cast<int>(cover.size()); ++slot) {
    const int s = layout.set_inner[cover[slot]];
    part.assignment[s] = 3 + slot;
    for (int child : inst.neighbors(s)) {
      if (child != kRootVertex) part.assignment[child] = 3 + slot;
    }
  }
  return part;
}

DistrictPartition WitnessFromCoverSubstar(const ReductionArtifact& art,
                                          std::vector<int> cover) {
  if (art.kind != ReductionKind::kSubstar) {
    throw std::invalid_argument("artifact is not a subdivided-star reduction");
  }
  cover = PadCover(art.source, std::move(cover));
  const SubstarLayout& layout = art.substar;

  DistrictPartition part;
  part.assignment.assign(art.instance.num_vertices(), 0);
  part.assignment[layout.c1] = 1;
  part.assignment[layout.c2] = 2;
  for (int v : layout.u) part.assignment[v] = 3;
  for (int s = 0; s < static_cast<int>(cover.size()); ++s) {
    const std::vector<int>& branch = layout.branches[s];
    const int x = layout.x_vertices[s][cover[s]];
    const auto after = std::find(branch.begin(), branch.end(), x) + 1;
    for (auto it = after; it != branch.end(); ++it) part.assignment[*it] = 4 + s;
  }
  return part;
}

std::vector<int> CoverFromWitnessSubstar(const ReductionArtifact& art,
                                         const DistrictPartition& part) {
  if (art.kind != ReductionKind::kSubstar) {
    throw std::invalid_argument("artifact is not a subdivided-star reduction");
  }
  if (!VerifyPartition(art.instance, part).empty() ||
      !Evaluate(art.instance, part)) {
    throw std::invalid_argument("partition does not satisfy the instance");
  }
  const int root_district = part.assignment[kRootVertex];
  std::vector<int> cover;
  for (const std::vector<int>& xs : art.substar.x_vertices) {
    for (int i = static_cast<int>(xs.size()) - 1; i >= 0; --i) {
      if (part.assignment[xs[i]] == root_district) {
        cover.push_back(i);
        break;
      }
    }
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (static_cast<int>(cover.size()) > art.source.budget ||
      !IsCover(art.source, cover)) {
    throw std::logic_error("extracted sets do not form a cover of size <= t");
  }
  return cover;
}

}  // namespace gerry
