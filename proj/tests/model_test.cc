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

#include "gerry/generators.h"
#include "gerry/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gerry {
namespace {

using ::gerry::testing::PathEdges;
using ::gerry::testing::ReferenceEvaluate;
using ::gerry::testing::UnitInstance;
using ::testing::ElementsAre;

bool HasViolation(const std::vector<std::string>& errors,
                  const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(), [&](const std::string& e) {
    return e.find(needle) != std::string::npos;
  });
}

TEST(ValidateInstanceTest, SmallestInstanceIsValid) {
  const RawInstance raw = RawInstance::FromChoices(std::vector<int>{0}, {}, 1, 0, 1);
  EXPECT_TRUE(ValidateInstance(raw).empty());
  EXPECT_NO_THROW(Instance::FromRaw(raw));
}

TEST(ValidateInstanceTest, RejectsTriangle) {
  const RawInstance raw = RawInstance::FromChoices(
      std::vector<int>{0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}}, 1, 0, 1);
  EXPECT_TRUE(HasViolation(ValidateInstance(raw), "cycle"));
  EXPECT_THROW(Instance::FromRaw(raw), ValidationError);
}

TEST(ValidateInstanceTest, RejectsKAboveN) {
  const RawInstance raw =
      RawInstance::FromChoices(std::vector<int>{0, 0}, {{0, 1}}, 1, 0, 3);
  EXPECT_TRUE(HasViolation(ValidateInstance(raw), "k exceeds n"));
}

TEST(ValidateInstanceTest, ReportsEveryViolation) {
  RawInstance raw =
      RawInstance::FromChoices(std::vector<int>{0, 1}, {{0, 5}}, 2, 0, 1);
  raw.weights[1][0] = -1;
  raw.preferred = 7;
  const auto errors = ValidateInstance(raw);
  EXPECT_TRUE(HasViolation(errors, "out of range in edge"));
  EXPECT_TRUE(HasViolation(errors, "negative weight"));
  EXPECT_TRUE(HasViolation(errors, "preferred candidate out of range"));
  try {
    Instance::FromRaw(raw);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations(), errors);
  }
}

TEST(ValidateInstanceTest, RejectsDuplicateEdgesAndBadTiebreak) {
  RawInstance raw = RawInstance::FromChoices(std::vector<int>{0, 1},
                                             {{0, 1}, {1, 0}}, 2, 0, 1);
  EXPECT_TRUE(HasViolation(ValidateInstance(raw), "duplicate edge"));
  raw.edges = {{0, 1}};
  raw.tiebreak_order = {1, 1};
  EXPECT_TRUE(HasViolation(ValidateInstance(raw), "tie-break order"));
}

TEST(InstanceTest, ComponentsAndAdjacency) {
  const Instance inst = UnitInstance({0, 0, 0, 0, 0}, {{3, 4}, {0, 1}}, 1, 3);
  EXPECT_EQ(inst.num_components(), 3);
  EXPECT_THAT(std::vector<int>(inst.neighbors(1).begin(), inst.neighbors(1).end()),
              ElementsAre(0));
  EXPECT_EQ(inst.degree(2), 0);
}

TEST(DistrictOutcomeTest, PreferredWinsOutright) {
  // Tallies p = 5, q = 3.
  RawInstance raw;
  raw.num_vertices = 1;
  raw.num_candidates = 2;
  raw.weights = {{5, 3}};
  raw.num_districts = 1;
  const Instance inst = Instance::FromRaw(raw);
  const DistrictOutcome out = ComputeDistrictOutcome(inst, std::vector<int>{0});
  EXPECT_THAT(out.top, ElementsAre(0));
  EXPECT_TRUE(out.p_win);
  EXPECT_TRUE(out.labels.empty());
}

TEST(DistrictOutcomeTest, StrictTieCreditsOpponent) {
  RawInstance raw;
  raw.num_vertices = 1;
  raw.num_candidates = 2;
  raw.weights = {{4, 4}};
  raw.num_districts = 1;
  const Instance inst = Instance::FromRaw(raw);
  const DistrictOutcome out = ComputeDistrictOutcome(inst, std::vector<int>{0});
  EXPECT_THAT(out.top, ElementsAre(0, 1));
  EXPECT_FALSE(out.p_win);
  EXPECT_THAT(out.labels, ElementsAre(1));

  const DistrictOutcome tb = ComputeDistrictOutcome(
      inst.WithMode(Semantics::kTiebreak), std::vector<int>{0});
  EXPECT_EQ(tb.tiebreak_winner, 0);
  EXPECT_TRUE(tb.p_win);
  EXPECT_TRUE(tb.labels.empty());
}

TEST(DistrictOutcomeTest, AllZeroDistrictHasEveryoneOnTop) {
  RawInstance raw;
  raw.num_vertices = 1;
  raw.num_candidates = 3;
  raw.weights = {{0, 0, 0}};
  raw.num_districts = 1;
  const Instance inst = Instance::FromRaw(raw);
  const DistrictOutcome out = ComputeDistrictOutcome(inst, std::vector<int>{0});
  EXPECT_THAT(out.top, ElementsAre(0, 1, 2));
  EXPECT_FALSE(out.p_win);
  EXPECT_THAT(out.labels, ElementsAre(1, 2));
}

TEST(DistrictOutcomeTest, CustomTiebreakOrder) {
  RawInstance raw;
  raw.num_vertices = 1;
  raw.num_candidates = 3;
  raw.weights = {{2, 2, 2}};
  raw.num_districts = 1;
  raw.mode = Semantics::kTiebreak;
  raw.tiebreak_order = {2, 0, 1};
  const Instance inst = Instance::FromRaw(raw);
  const DistrictOutcome out = ComputeDistrictOutcome(inst, std::vector<int>{0});
  EXPECT_EQ(out.tiebreak_winner, 2);
  EXPECT_THAT(out.labels, ElementsAre(2));
}

TEST(DistrictOutcomeTest, EmptyMembersThrow) {
  const Instance inst = UnitInstance({0}, {}, 1, 1);
  EXPECT_THROW(ComputeDistrictOutcome(inst, std::vector<int>{}),
               std::invalid_argument);
}

TEST(VerifyPartitionTest, AcceptsContiguousSplit) {
  const Instance inst = UnitInstance({0, 0, 0}, PathEdges(3), 1, 2);
  EXPECT_TRUE(VerifyPartition(inst, {{0, 0, 1}}).empty());
}

TEST(VerifyPartitionTest, FlagsDisconnectedDistrict) {
  const Instance inst = UnitInstance({0, 0, 0}, PathEdges(3), 1, 2);
  const auto violations = VerifyPartition(inst, {{0, 1, 0}});
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].ToString(), "district 1 disconnected");
}

TEST(VerifyPartitionTest, FlagsEmptyDistrict) {
  const Instance inst = UnitInstance({0, 0, 0}, PathEdges(3), 1, 3);
  const auto violations = VerifyPartition(inst, {{0, 0, 1}});
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].kind, PartitionViolation::Kind::kEmptyDistrict);
  EXPECT_EQ(violations[0].ToString(), "district 3 empty");
}

TEST(VerifyPartitionTest, FlagsLengthAndRange) {
  const Instance inst = UnitInstance({0, 0, 0}, PathEdges(3), 1, 2);
  EXPECT_EQ(VerifyPartition(inst, {{0, 1}})[0].kind,
            PartitionViolation::Kind::kWrongLength);
  EXPECT_EQ(VerifyPartition(inst, {{0, 1, 2}})[0].kind,
            PartitionViolation::Kind::kDistrictOutOfRange);
}

TEST(VerifyPartitionTest, AcceptsExactlyConnectedAssignments) {
  // Over every assignment of 6 tree vertices to 3 labels, the verifier agrees
  // with a direct connectivity check of each class.
  const Instance inst =
      UnitInstance({0, 0, 0, 0, 0, 0}, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}},
                   1, 3);
  std::vector<int> a(6, 0);
  int accepted = 0;
  for (int code = 0; code < 729; ++code) {
    int x = code;
    for (int v = 0; v < 6; ++v, x /= 3) a[v] = x % 3;
    bool expected = true;
    for (const auto& block : DistrictPartition{a}.Districts(3)) {
      expected = expected && testing::InducedConnected(inst, block);
    }
    EXPECT_EQ(VerifyPartition(inst, {a}).empty(), expected);
    accepted += expected ? 1 : 0;
  }
  // 5 edges, cut 2: C(5,2) partitions, times 3! labelings.
  EXPECT_EQ(accepted, 10 * 6);
}

TEST(EvaluateTest, SingleVertexForPreferred) {
  EXPECT_TRUE(Evaluate(UnitInstance({0}, {}, 1, 1), {{0}}));
}

TEST(EvaluateTest, FourDistrictsPreferredWinsTwo) {
  // p wins two singleton districts; candidates 1 and 2 win one each.
  const Instance inst = UnitInstance({0, 0, 1, 2}, PathEdges(4), 3, 4);
  EXPECT_TRUE(Evaluate(inst, {{0, 1, 2, 3}}));
}

TEST(EvaluateTest, TieCountsAsLeadUnderStrict) {
  // Districts: {p}, {p}, {q}, {p q}. p wins 2, q leads 2.
  const Instance inst = UnitInstance({0, 0, 1, 0, 1}, PathEdges(5), 2, 4);
  EXPECT_FALSE(Evaluate(inst, {{0, 1, 2, 3, 3}}));
  // Under tie-break with p first, the mixed district goes to p.
  EXPECT_TRUE(Evaluate(inst.WithMode(Semantics::kTiebreak), {{0, 1, 2, 3, 3}}));
}

TEST(EvaluateTest, InvalidPartitionThrows) {
  const Instance inst = UnitInstance({0, 0, 0}, PathEdges(3), 1, 2);
  EXPECT_THROW(Evaluate(inst, {{0, 1, 0}}), std::invalid_argument);
}

class EvaluatePropertyTest : public ::testing::TestWithParam<Semantics> {};

TEST_P(EvaluatePropertyTest, MatchesDefinitionAndInvariances) {
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    RandomSpec spec;
    spec.shape = Shape::kTree;
    spec.num_vertices = 2 + static_cast<int>(seed % 6);
    spec.num_districts = 1 + static_cast<int>(seed % 3);
    spec.num_districts = std::min(spec.num_districts, spec.num_vertices);
    spec.weights = seed % 2 ? WeightModel::kUnit : WeightModel::kVector;
    spec.mode = GetParam();
    spec.seed = seed;
    const Instance inst = GenerateInstance(spec);
    const int k = inst.num_districts();

    RawInstance scaled_raw = inst.raw();
    for (auto& row : scaled_raw.weights) {
      for (Votes& w : row) w *= 7;
    }
    const Instance scaled = Instance::FromRaw(scaled_raw);

    for (const DistrictPartition& part : EnumeratePartitions(inst)) {
      const bool value = Evaluate(inst, part);
      EXPECT_EQ(value, testing::ReferenceEvaluate(inst, part.assignment));
      EXPECT_EQ(value, Evaluate(scaled, part));

      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      DistrictPartition relabeled = part;
      for (int& d : relabeled.assignment) d = perm[d];
      EXPECT_EQ(value, Evaluate(inst, relabeled));

      for (const DistrictOutcome& out : PartitionOutcomes(inst, part)) {
        const Votes best =
            *std::max_element(out.tallies.begin(), out.tallies.end());
        for (int c = 0; c < inst.num_candidates(); ++c) {
          const bool in_top =
              std::find(out.top.begin(), out.top.end(), c) != out.top.end();
          EXPECT_EQ(in_top, out.tallies[c] == best);
        }
        EXPECT_NE(std::find(out.top.begin(), out.top.end(), out.tiebreak_winner),
                  out.top.end());
        if (inst.mode() == Semantics::kStrict && out.p_win) {
          EXPECT_TRUE(out.labels.empty());
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothModes, EvaluatePropertyTest,
                         ::testing::Values(Semantics::kStrict,
                                           Semantics::kTiebreak));

}  // namespace
}  // namespace gerry
