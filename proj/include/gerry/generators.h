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

// Seeded random instances. Output is a pure function of the spec: the engine
// is std::mt19937_64 and bounded draws use rejection sampling.

#ifndef GERRY_GENERATORS_H_
#define GERRY_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gerry/model.h"
#include "gerry/set_cover.h"

namespace gerry {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int64_t Uniform(int64_t lo, int64_t hi);

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (int64_t i = static_cast<int64_t>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[Uniform(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Shape { kPath, kPathForest, kTree, kSubdividedStar, kForest };
enum class WeightModel {
  // Each vertex casts one vote for a random candidate.
  kUnit,
  // Each vertex casts a random number of votes in [0, max_weight] for every
  // candidate.
  kVector,
};

// Accepts path, path-forest, tree, subdivided-star, forest.
Shape ParseShape(const std::string& name);

struct RandomSpec {
  Shape shape = Shape::kTree;
  int num_vertices = 8;
  int num_candidates = 3;
  int num_districts = 2;
  // kTree: exact leaf count (0 = unconstrained). kSubdividedStar: number of
  // legs, at least 3.
  int leaves = 0;
  // kPathForest and kForest: number of components (0 = random).
  int components = 0;
  WeightModel weights = WeightModel::kUnit;
  int max_weight = 5;
  Semantics mode = Semantics::kStrict;
  uint64_t seed = 1;
};

// Throws std::invalid_argument on a contradictory spec.
Instance GenerateInstance(const RandomSpec& spec);

// Uniform random labelled tree on `n` vertices (Prufer decoding), or one with
// exactly `leaves` leaves when leaves > 0.
std::vector<Edge> RandomTreeEdges(int n, int leaves, Rng& rng);

// Random valid Set Cover instance: each set takes each element with
// probability 1/2, uncovered elements are added to a random set, and the
// budget is uniform in [1, min(max_budget, m)].
SetCoverInstance RandomSetCover(int num_elements, int num_sets, int max_budget,
                                Rng& rng);

}  // namespace gerry

#endif  // GERRY_GENERATORS_H_
