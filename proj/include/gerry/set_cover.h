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

// Set Cover instances, their text format, and a brute-force decision
// procedure.
//
//   sc 1
//   n <elements> m <sets> t <budget>
//   s <setIndex> <e1> <e2> ...     # one line per set, 1-based
//
// Elements and sets are 0-based in memory.

#ifndef GERRY_SET_COVER_H_
#define GERRY_SET_COVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gerry {

struct SetCoverInstance {
  int num_elements = 0;
  // Each set sorted ascending without duplicates.
  std::vector<std::vector<int>> sets;
  int budget = 0;

  int num_sets() const { return static_cast<int>(sets.size()); }
  // Number of sets containing each element.
  std::vector<int> Frequencies() const;

  friend bool operator==(const SetCoverInstance&,
                         const SetCoverInstance&) = default;
};

// Empty when valid. Requires at least one element, budget in [1, m], and
// every element covered by some set.
std::vector<std::string> ValidateSetCover(const SetCoverInstance& sc);
// Throws ValidationError.
void CheckSetCover(const SetCoverInstance& sc);

// Throws ParseError or ValidationError.
SetCoverInstance ParseSetCover(std::string_view text);
std::string SerializeSetCover(const SetCoverInstance& sc);

// True iff the chosen sets (distinct indices) cover every element.
bool IsCover(const SetCoverInstance& sc, const std::vector<int>& chosen);

struct CoverResult {
  bool yes = false;
  // Smallest cover, lexicographically first among those of its size.
  std::optional<std::vector<int>> cover;
};

// Throws ResourceLimitError when more than `max_subsets` subsets would need
// to be examined.
CoverResult SolveSetCoverBruteForce(const SetCoverInstance& sc,
                                    uint64_t max_subsets = 100'000'000);

// Pads with singleton sets until every element has frequency
// d = max(min_frequency, largest frequency). Original sets stay first; the
// padding for element 0 comes before that of element 1, and so on.
SetCoverInstance EqualizeFrequencies(const SetCoverInstance& sc,
                                     int min_frequency = 3);

}  // namespace gerry

#endif  // GERRY_SET_COVER_H_
