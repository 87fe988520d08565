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

#include "gerry/generators.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace gerry {
namespace {

std::vector<int> Permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(perm);
  return perm;
}

// Sizes of a random composition of `total` into `parts` positive parts.
std::vector<int> RandomComposition(int total, int parts, Rng& rng) {
  std::vector<int> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  rng.Shuffle(cuts);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(total - prev);
  return sizes;
}

std::vector<Edge> DecodePrufer(const std::vector<int>& code, int n) {
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

void Normalize(std::vector<Edge>& edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
}

int ComponentCount(int requested, int n, Rng& rng) {
  if (requested < 0 || requested > n) {
    throw std::invalid_argument("component count must lie in [1, n]");
  }
  return requested == 0 ? static_cast<int>(rng.Uniform(1, n)) : requested;
}

}  // namespace

int64_t Rng::Uniform(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(engine_());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int64_t>(x % span);
}

Shape ParseShape(const std::string& name) {
  if (name == "path") return Shape::kPath;
  if (name == "path-forest") return Shape::kPathForest;
  if (name == "tree") return Shape::kTree;
  if (name == "subdivided-star") return Shape::kSubdividedStar;
  if (name == "forest") return Shape::kForest;
  throw std::invalid_argument("unknown shape '" + name + "'");
}

std::vector<Edge> RandomTreeEdges(int n, int leaves, Rng& rng) {
  if (n <= 1) {
    if (leaves > 1) throw std::invalid_argument("too many leaves for n");
    return {};
  }
  if (n == 2) {
    if (leaves != 0 && leaves != 2) {
      throw std::invalid_argument("a 2-vertex tree has exactly 2 leaves");
    }
    return {{0, 1}};
  }
  std::vector<int> code(n - 2);
  if (leaves == 0) {
    for (int& x : code) x = static_cast<int>(rng.Uniform(0, n - 1));
  } else {
    // Vertices absent from the Prufer code are exactly the leaves.
    if (leaves < 2 || leaves > n - 1) {
      throw std::invalid_argument("leaf budget must lie in [2, n - 1]");
    }
    std::vector<int> inner = Permutation(n, rng);
    inner.resize(n - leaves);
    for (int i = 0; i < n - 2; ++i) {
      code[i] = i < static_cast<int>(inner.size())
                    ? inner[i]
                    : inner[rng.Uniform(0, static_cast<int64_t>(inner.size()) - 1)];
    }
    rng.Shuffle(code);
  }
  return DecodePrufer(code, n);
}

Instance GenerateInstance(const RandomSpec& spec) {
  const int n = spec.num_vertices;
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (spec.num_candidates < 1) throw std::invalid_argument("need a candidate");
  if (spec.num_districts < 1 || spec.num_districts > n) {
    throw std::invalid_argument("k must lie in [1, n]");
  }
  if (spec.max_weight < 0) throw std::invalid_argument("negative max weight");
  Rng rng(spec.seed);

  std::vector<Edge> edges;
  switch (spec.shape) {
    case Shape::kPath: {
      const std::vector<int> perm = Permutation(n, rng);
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(perm[i], perm[i + 1]);
      break;
    }
    case Shape::kPathForest: {
      const int c = ComponentCount(spec.components, n, rng);
      const std::vector<int> perm = Permutation(n, rng);
      int start = 0;
      for (int size : RandomComposition(n, c, rng)) {
        for (int i = start; i + 1 < start + size; ++i) {
          edges.emplace_back(perm[i], perm[i + 1]);
        }
        start += size;
      }
      break;
    }
    case Shape::kTree:
      if (n >= 2 && spec.leaves == 1) {
        throw std::invalid_argument("leaf budget below 2 for n >= 2");
      }
      edges = RandomTreeEdges(n, spec.leaves, rng);
      break;
    case Shape::kSubdividedStar: {
      if (spec.leaves < 3) {
        throw std::invalid_argument("a subdivided star needs at least 3 legs");
      }
      if (n < spec.leaves + 1) {
        throw std::invalid_argument("too few vertices for the requested legs");
      }
      const std::vector<int> perm = Permutation(n, rng);
      int next = 1;
      for (int length : RandomComposition(n - 1, spec.leaves, rng)) {
        int tail = perm[0];
        for (int i = 0; i < length; ++i) {
          edges.emplace_back(tail, perm[next]);
          tail = perm[next++];
        }
      }
      break;
    }
    case Shape::kForest: {
      const int c = ComponentCount(spec.components, n, rng);
      const std::vector<int> perm = Permutation(n, rng);
      int start = 0;
      for (int size : RandomComposition(n, c, rng)) {
        for (const auto& [u, v] : RandomTreeEdges(size, 0, rng)) {
          edges.emplace_back(perm[start + u], perm[start + v]);
        }
        start += size;
      }
      break;
    }
  }
  Normalize(edges);

  RawInstance raw;
  raw.num_vertices = n;
  raw.edges = std::move(edges);
  raw.num_candidates = spec.num_candidates;
  raw.preferred = 0;
  raw.num_districts = spec.num_districts;
  raw.mode = spec.mode;
  raw.weights.assign(n, std::vector<Votes>(spec.num_candidates, 0));
  for (auto& row : raw.weights) {
    if (spec.weights == WeightModel::kUnit) {
      row[rng.Uniform(0, spec.num_candidates - 1)] = 1;
    } else {
      for (Votes& w : row) w = rng.Uniform(0, spec.max_weight);
    }
  }
  return Instance::FromRaw(std::move(raw));
}

SetCoverInstance RandomSetCover(int num_elements, int num_sets, int max_budget,
                                Rng& rng) {
  if (num_elements < 1 || num_sets < 1 || max_budget < 1) {
    throw std::invalid_argument("set cover generator needs n, m, t >= 1");
  }
  SetCoverInstance sc;
  sc.num_elements = num_elements;
  sc.sets.resize(num_sets);
  std::vector<bool> covered(num_elements, false);
  for (auto& set : sc.sets) {
    for (int e = 0; e < num_elements; ++e) {
      if (rng.Uniform(0, 1) == 1) {
        set.push_back(e);
        covered[e] = true;
      }
    }
  }
  for (int e = 0; e < num_elements; ++e) {
    if (covered[e]) continue;
    auto& set = sc.sets[rng.Uniform(0, num_sets - 1)];
    set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  }
  sc.budget = static_cast<int>(rng.Uniform(1, std::min(max_budget, num_sets)));
  return sc;
}

}  // namespace gerry
