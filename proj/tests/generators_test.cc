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
#include <map>
#include <stdexcept>

#include "gerry/instance_io.h"
#include "gerry/path_solver.h"
#include "gerry/tree_solver.h"
#include "gtest/gtest.h"

namespace gerry {
namespace {

int MaxDegree(const Instance& inst) {
  int best = 0;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    best = std::max(best, static_cast<int>(inst.neighbors(v).size()));
  }
  return best;
}

TEST(RngTest, UniformStaysInRangeAndCoversIt) {
  Rng rng(42);
  std::map<int64_t, int> hits;
  for (int i = 0; i < 6000; ++i) {
    const int64_t x = rng.Uniform(-2, 3);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 3);
    ++hits[x];
  }
  EXPECT_EQ(hits.size(), 6u);
  for (const auto& [value, count] : hits) EXPECT_GT(count, 800) << value;
  EXPECT_EQ(rng.Uniform(7, 7), 7);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(3), b(3), c(4);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const int64_t x = a.Uniform(0, 1'000'000);
    EXPECT_EQ(x, b.Uniform(0, 1'000'000));
    differs |= x != c.Uniform(0, 1'000'000);
  }
  EXPECT_TRUE(differs);
}

TEST(GenerateInstanceTest, Deterministic) {
  RandomSpec spec;
  spec.num_vertices = 30;
  spec.weights = WeightModel::kVector;
  spec.seed = 77;
  EXPECT_EQ(SerializeInstance(GenerateInstance(spec)),
            SerializeInstance(GenerateInstance(spec)));
  RandomSpec other = spec;
  other.seed = 78;
  EXPECT_NE(SerializeInstance(GenerateInstance(spec)),
            SerializeInstance(GenerateInstance(other)));
}

TEST(GenerateInstanceTest, Shapes) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSpec spec;
    spec.num_vertices = 12;
    spec.num_districts = 4;
    spec.seed = seed;

    spec.shape = Shape::kPath;
    Instance inst = GenerateInstance(spec);
    EXPECT_EQ(inst.num_edges(), 11);
    EXPECT_TRUE(IsPathForest(inst));

    spec.shape = Shape::kPathForest;
    spec.components = 3;
    inst = GenerateInstance(spec);
    EXPECT_EQ(inst.num_components(), 3);
    EXPECT_TRUE(IsPathForest(inst));

    spec.shape = Shape::kForest;
    inst = GenerateInstance(spec);
    EXPECT_EQ(inst.num_components(), 3);

    spec.shape = Shape::kTree;
    spec.components = 0;
    spec.leaves = 5;
    inst = GenerateInstance(spec);
    EXPECT_EQ(inst.num_components(), 1);
    EXPECT_EQ(LeafCount(inst), 5);

    spec.shape = Shape::kSubdividedStar;
    spec.leaves = 4;
    inst = GenerateInstance(spec);
    EXPECT_EQ(inst.num_components(), 1);
    EXPECT_EQ(LeafCount(inst), 4);
    EXPECT_EQ(MaxDegree(inst), 4);
    EXPECT_EQ(SummedBranchDegree(inst), 4);
  }
}

TEST(GenerateInstanceTest, WeightModels) {
  RandomSpec spec;
  spec.num_vertices = 40;
  spec.num_candidates = 4;
  spec.seed = 9;
  const Instance unit = GenerateInstance(spec);
  for (int v = 0; v < unit.num_vertices(); ++v) {
    Votes total = 0;
    for (Votes x : unit.weights(v)) total += x;
    EXPECT_EQ(total, 1);
  }
  spec.weights = WeightModel::kVector;
  spec.max_weight = 2;
  const Instance vec = GenerateInstance(spec);
  for (int v = 0; v < vec.num_vertices(); ++v) {
    for (Votes x : vec.weights(v)) {
      EXPECT_GE(x, 0);
      EXPECT_LE(x, 2);
    }
  }
  EXPECT_EQ(vec.preferred(), 0);
}

TEST(GenerateInstanceTest, RejectsContradictions) {
  RandomSpec spec;
  spec.num_vertices = 3;
  spec.num_districts = 4;
  EXPECT_THROW(GenerateInstance(spec), std::invalid_argument);
  spec.num_districts = 1;
  spec.shape = Shape::kSubdividedStar;
  spec.leaves = 2;
  EXPECT_THROW(GenerateInstance(spec), std::invalid_argument);
  spec.shape = Shape::kTree;
  spec.leaves = 1;
  EXPECT_THROW(GenerateInstance(spec), std::invalid_argument);
}

TEST(RandomTreeEdgesTest, ExactLeafCount) {
  Rng rng(11);
  for (int n = 3; n <= 40; ++n) {
    for (int leaves = 2; leaves < n; ++leaves) {
      const auto edges = RandomTreeEdges(n, leaves, rng);
      ASSERT_EQ(static_cast<int>(edges.size()), n - 1);
      std::vector<int> degree(n, 0);
      for (const auto& [u, v] : edges) {
        ++degree[u];
        ++degree[v];
      }
      EXPECT_EQ(std::count(degree.begin(), degree.end(), 1), leaves);
    }
  }
}

TEST(RandomSetCoverTest, AlwaysValid) {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const SetCoverInstance sc = RandomSetCover(1 + i % 6, 1 + i % 5, 3, rng);
    EXPECT_TRUE(ValidateSetCover(sc).empty());
    EXPECT_LE(sc.budget, std::min(3, sc.num_sets()));
  }
}

}  // namespace
}  // namespace gerry
