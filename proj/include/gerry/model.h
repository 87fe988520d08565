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

// Gerrymandering instances on forests, district tallies, and the win/lead
// semantics used by every solver in this library.
//
// All indices are 0-based in memory: vertices in [0, n), candidates in
// [0, num_candidates), districts in [0, k). The text formats in
// instance_io.h are 1-based.

#ifndef GERRY_MODEL_H_
#define GERRY_MODEL_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gerry {

using Votes = int64_t;
using Edge = std::pair<int, int>;

enum class Semantics {
  // A candidate wins a district only as its unique top scorer; every
  // candidate in top(D) leads D.
  kStrict,
  // Ties in top(D) are broken by a fixed candidate priority; each district
  // has exactly one winner.
  kTiebreak,
};

const char* SemanticsName(Semantics mode);

// Thrown by Instance::FromRaw and the other validating constructors. Carries
// every violated invariant, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Unchecked instance description, as produced by a parser or generator.
struct RawInstance {
  int num_vertices = 0;
  std::vector<Edge> edges;
  int num_candidates = 0;
  // weights[v][c]: votes cast by vertex v for candidate c.
  std::vector<std::vector<Votes>> weights;
  int preferred = 0;
  int num_districts = 0;
  Semantics mode = Semantics::kStrict;
  // Candidate priority for kTiebreak, highest first. Empty means ascending
  // candidate index.
  std::vector<int> tiebreak_order;

  // Unweighted convenience form: vertex v casts one vote for choice[v].
  static RawInstance FromChoices(std::span<const int> choice,
                                 std::vector<Edge> edges, int num_candidates,
                                 int preferred, int num_districts,
                                 Semantics mode = Semantics::kStrict);
};

// Returns the violated invariants of `raw`; empty when it is a valid instance.
std::vector<std::string> ValidateInstance(const RawInstance& raw);

// A validated, immutable instance with cached adjacency.
class Instance {
 public:
  // Throws ValidationError listing every violation.
  static Instance FromRaw(RawInstance raw);

  int num_vertices() const { return raw_.num_vertices; }
  int num_edges() const { return static_cast<int>(raw_.edges.size()); }
  int num_candidates() const { return raw_.num_candidates; }
  int preferred() const { return raw_.preferred; }
  int num_districts() const { return raw_.num_districts; }
  Semantics mode() const { return raw_.mode; }
  int num_components() const { return num_components_; }

  const std::vector<Edge>& edges() const { return raw_.edges; }
  std::span<const Votes> weights(int v) const { return raw_.weights[v]; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Full priority order (highest first); always num_candidates long.
  const std::vector<int>& tiebreak_order() const { return tiebreak_order_; }
  bool has_default_tiebreak() const { return raw_.tiebreak_order.empty(); }

  const RawInstance& raw() const { return raw_; }

  // Copies with one field replaced; the result is revalidated.
  Instance WithMode(Semantics mode) const;
  Instance WithDistricts(int num_districts) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.raw_.num_vertices == b.raw_.num_vertices &&
           a.raw_.edges == b.raw_.edges &&
           a.raw_.num_candidates == b.raw_.num_candidates &&
           a.raw_.weights == b.raw_.weights &&
           a.raw_.preferred == b.raw_.preferred &&
           a.raw_.num_districts == b.raw_.num_districts &&
           a.raw_.mode == b.raw_.mode &&
           a.tiebreak_order_ == b.tiebreak_order_;
  }

 private:
  explicit Instance(RawInstance raw);

  RawInstance raw_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> tiebreak_order_;
  int num_components_ = 0;
};

// Assignment of every vertex to a district in [0, k).
struct DistrictPartition {
  std::vector<int> assignment;

  // Members of each district, in increasing vertex order.
  std::vector<std::vector<int>> Districts(int num_districts) const;

  friend bool operator==(const DistrictPartition&,
                         const DistrictPartition&) = default;
};

struct DistrictOutcome {
  std::vector<Votes> tallies;
  // Candidates attaining the maximum tally, ascending.
  std::vector<int> top;
  // The unique winner under the tie-break priority. Always a member of top.
  int tiebreak_winner = -1;
  // kStrict: top == {p}. kTiebreak: tiebreak_winner == p.
  bool p_win = false;
  // Opponents credited with this district: top \ {p} under kStrict,
  // {tiebreak_winner} \ {p} under kTiebreak. Ascending.
  std::vector<int> labels;
};

// Classifies a district from its per-candidate tallies.
DistrictOutcome OutcomeFromTallies(const Instance& inst,
                                   std::vector<Votes> tallies);

// Throws std::invalid_argument on an empty or out-of-range member set.
DistrictOutcome ComputeDistrictOutcome(const Instance& inst,
                                       std::span<const int> members);

// Accumulates district outcomes and answers the plurality question: does p
// win more districts than any other candidate is credited with? Reusable
// across partitions via Reset().
class Scoreboard {
 public:
  explicit Scoreboard(const Instance& inst);

  void Reset();
  void Add(const DistrictOutcome& outcome);
  // Allocation-free variant of Add for solver inner loops.
  void AddTallies(std::span<const Votes> tallies);

  int preferred_wins() const { return preferred_wins_; }
  // Largest label count over candidates other than p (0 if there are none).
  int max_opponent_count() const;
  bool Satisfied() const { return preferred_wins_ > max_opponent_count(); }

 private:
  const Instance* inst_;
  int preferred_wins_ = 0;
  std::vector<int> opponent_counts_;
};

struct PartitionViolation {
  enum class Kind {
    kWrongLength,
    kDistrictOutOfRange,
    kEmptyDistrict,
    kDisconnectedDistrict,
  };
  Kind kind;
  // District (kEmptyDistrict, kDisconnectedDistrict) or vertex index.
  int index = 0;

  // 1-based human-readable form, e.g. "district 1 disconnected".
  std::string ToString() const;
  friend bool operator==(const PartitionViolation&,
                         const PartitionViolation&) = default;
};

// Structural check of a district-partition: length, index range, exactly k
// nonempty districts, and connectivity of each district.
std::vector<PartitionViolation> VerifyPartition(const Instance& inst,
                                                const DistrictPartition& part);

// True iff `part` satisfies the instance. Throws std::invalid_argument if
// `part` fails VerifyPartition.
bool Evaluate(const Instance& inst, const DistrictPartition& part);

// Per-district outcomes of a structurally valid partition.
std::vector<DistrictOutcome> PartitionOutcomes(const Instance& inst,
                                               const DistrictPartition& part);

}  // namespace gerry

#endif  // GERRY_MODEL_H_
