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

// Set Cover to unweighted Gerrymandering, two ways.
//
// Depth-two trees. After padding every element to frequency d >= 3, the root
// r (votes p) gets d weight branches r - w_i - w'_i (p, then the adversary
// q), one set branch r - s_i - s'_i per set (both vote b_i), and for every
// element e_j, d leaves voting a_j hung below the d set vertices s_i with
// e_j in S_i. k = t + 3 and |C| = n + m' + 2.
//
// Subdivided stars. The root r votes for the ally q. Branch one is
// c_1 c_2 u_1 .. u_n (p, p, a_1 .. a_n); branch two is w_1 .. w_{t-1} (q).
// Each of the t selection branches is v_0^1 .. v_0^n, then groups
// g_1 .. g_m, then y_0 .. y_m (voting the branch candidate b_s). Group g_i
// holds x_i (q) and v_i^1 .. v_i^n (a_j), with v_i^j before x_i exactly when
// e_j is not in S_i. k = t + 4 and |C| = n + t + 2.
//
// Candidates are numbered p = 0, q = 1, a_j = 2 + j, then b_i (or b_s).
// The root is vertex 0 in both constructions.

#ifndef GERRY_REDUCTIONS_H_
#define GERRY_REDUCTIONS_H_

#include <string>
#include <vector>

#include "gerry/model.h"
#include "gerry/set_cover.h"

namespace gerry {

inline constexpr int kPreferredCandidate = 0;
inline constexpr int kSecondCandidate = 1;
inline constexpr int kRootVertex = 0;

enum class ReductionKind { kDepth2, kSubstar };

struct Depth2Layout {
  int frequency = 0;
  std::vector<int> weight_inner;  // w_i
  std::vector<int> weight_outer;  // w'_i
  std::vector<int> set_inner;     // s_i
  std::vector<int> set_outer;     // s'_i
  // element_vertices[j][l] is v_l^j, attached below the l-th set holding e_j.
  std::vector<std::vector<int>> element_vertices;
};

struct SubstarLayout {
  int c1 = 0;
  int c2 = 0;
  std::vector<int> u;
  std::vector<int> w;
  // Vertices of each selection branch, ordered away from the root.
  std::vector<std::vector<int>> branches;
  // x_vertices[s][i]: x_i on selection branch s.
  std::vector<std::vector<int>> x_vertices;
};

struct ReductionArtifact {
  ReductionKind kind;
  // The Set Cover instance the construction encodes (after frequency
  // padding, for kDepth2).
  SetCoverInstance source;
  Instance instance;
  std::vector<std::string> vertex_roles;
  std::vector<std::string> candidate_roles;
  Depth2Layout depth2;    // kDepth2 only
  SubstarLayout substar;  // kSubstar only
};

// Throws ValidationError on an invalid Set Cover instance.
ReductionArtifact ReduceDepth2(const SetCoverInstance& sc,
                               int min_frequency = 3);
ReductionArtifact ReduceSubstar(const SetCoverInstance& sc);

// The district-partitions built from a cover. `cover`
// holds set indices of art.source; covers smaller than t are padded with the
// lowest unused indices. Throws std::invalid_argument if it is not a cover
// of size at most t.
DistrictPartition WitnessFromCoverDepth2(const ReductionArtifact& art,
                                         std::vector<int> cover);
DistrictPartition WitnessFromCoverSubstar(const ReductionArtifact& art,
                                          std::vector<int> cover);

// Reads a cover off a satisfying partition of a substar instance: on each
// selection branch, the set of the last x_i inside the root district. Throws
// std::invalid_argument if `part` does not satisfy the instance.
std::vector<int> CoverFromWitnessSubstar(const ReductionArtifact& art,
                                         const DistrictPartition& part);

}  // namespace gerry

#endif  // GERRY_REDUCTIONS_H_
