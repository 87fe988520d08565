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

#include "gerry/set_cover.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gerry/instance_io.h"
#include "gerry/model.h"
#include "gerry/oracle.h"
#include "text_lines.h"

namespace gerry {

std::vector<int> SetCoverInstance::Frequencies() const {
  std::vector<int> freq(std::max(num_elements, 0), 0);
  for (const auto& set : sets) {
    for (int e : set) {
      if (e >= 0 && e < num_elements) ++freq[e];
    }
  }
  return freq;
}

std::vector<std::string> ValidateSetCover(const SetCoverInstance& sc) {
  std::vector<std::string> errors;
  if (sc.num_elements < 1) errors.push_back("need at least one element");
  if (sc.sets.empty()) errors.push_back("need at least one set");
  for (int i = 0; i < sc.num_sets(); ++i) {
    const auto& set = sc.sets[i];
    for (size_t j = 0; j < set.size(); ++j) {
      if (set[j] < 0 || set[j] >= sc.num_elements) {
        errors.push_back("set " + std::to_string(i + 1) +
                         " has an element out of range");
        break;
      }
      if (j > 0 && set[j] <= set[j - 1]) {
        errors.push_back("set " + std::to_string(i + 1) +
                         " is not sorted or repeats an element");
        break;
      }
    }
  }
  const std::vector<int> freq = sc.Frequencies();
  for (int e = 0; e < static_cast<int>(freq.size()); ++e) {
    if (freq[e] == 0) {
      errors.push_back("element " + std::to_string(e + 1) +
                       " appears in no set (trivial NO-instance)");
    }
  }
  if (sc.budget < 1) errors.push_back("budget t must be at least 1");
  if (sc.budget > sc.num_sets()) {
    errors.push_back("budget t exceeds m (trivial YES-instance)");
  }
  return errors;
}

void CheckSetCover(const SetCoverInstance& sc) {
  std::vector<std::string> errors = ValidateSetCover(sc);
  if (!errors.empty()) throw ValidationError(std::move(errors));
}

SetCoverInstance ParseSetCover(std::string_view text) {
  using internal::Directive;
  const std::vector<Directive> lines = internal::Tokenize(text);
  internal::ExpectVersionHeader(lines, "sc");
  if (lines.size() < 2) throw ParseError(lines[0].line, "missing header line");
  const Directive& header = lines[1];
  if (header.tokens.size() != 6 || header.tokens[0] != "n" ||
      header.tokens[2] != "m" || header.tokens[4] != "t") {
    throw ParseError(header.line, "expected 'n <elements> m <sets> t <budget>'");
  }
  constexpr int kMax = 1 << 20;
  SetCoverInstance sc;
  sc.num_elements = static_cast<int>(internal::ParseInteger(header, 1, 1, kMax));
  const int m = static_cast<int>(internal::ParseInteger(header, 3, 1, kMax));
  sc.budget = static_cast<int>(internal::ParseInteger(header, 5, 0, kMax));
  sc.sets.resize(m);
  std::vector<bool> seen(m, false);
  for (size_t i = 2; i < lines.size(); ++i) {
    const Directive& d = lines[i];
    if (d.tokens[0] != "s") {
      throw ParseError(d.line, "unknown directive '" + d.tokens[0] + "'");
    }
    const int index = internal::ParseIndex(d, 1, m) - 1;
    if (seen[index]) throw ParseError(d.line, "set listed twice");
    seen[index] = true;
    std::set<int> elements;
    for (size_t j = 2; j < d.tokens.size(); ++j) {
      if (!elements.insert(internal::ParseIndex(d, j, sc.num_elements) - 1)
               .second) {
        throw ParseError(d.line, "element repeated within a set");
      }
    }
    sc.sets[index].assign(elements.begin(), elements.end());
  }
  for (int i = 0; i < m; ++i) {
    if (!seen[i]) {
      throw ParseError(lines.back().line,
                       "set " + std::to_string(i + 1) + " not listed");
    }
  }
  CheckSetCover(sc);
  return sc;
}

std::string SerializeSetCover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << "sc 1\n";
  out << "n " << sc.num_elements << " m " << sc.num_sets() << " t "
      << sc.budget << "\n";
  for (int i = 0; i < sc.num_sets(); ++i) {
    out << "s " << i + 1;
    for (int e : sc.sets[i]) out << " " << e + 1;
    out << "\n";
  }
  return out.str();
}

bool IsCover(const SetCoverInstance& sc, const std::vector<int>& chosen) {
  std::vector<bool> covered(sc.num_elements, false);
  for (int i : chosen) {
    if (i < 0 || i >= sc.num_sets()) return false;
    for (int e : sc.sets[i]) covered[e] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

CoverResult SolveSetCoverBruteForce(const SetCoverInstance& sc,
                                    uint64_t max_subsets) {
  CheckSetCover(sc);
  const int m = sc.num_sets();
  uint64_t work = 0;
  for (int size = 1; size <= sc.budget && work <= max_subsets; ++size) {
    work += std::min(BinomialSaturating(m, size), max_subsets + 1);
  }
  if (work > max_subsets) {
    throw ResourceLimitError("set cover brute force: too many subsets");
  }

  CoverResult result;
  std::vector<int> chosen;
  std::vector<int> hits(sc.num_elements, 0);
  for (int size = 1; size <= sc.budget; ++size) {
    chosen.resize(size);
    for (int i = 0; i < size; ++i) chosen[i] = i;
    while (true) {
      std::fill(hits.begin(), hits.end(), 0);
      int covered = 0;
      for (int i : chosen) {
        for (int e : sc.sets[i]) covered += hits[e]++ == 0 ? 1 : 0;
      }
      if (covered == sc.num_elements) {
        result.yes = true;
        result.cover = chosen;
        return result;
      }
      int pos = size - 1;
      while (pos >= 0 && chosen[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++chosen[pos];
      for (int j = pos + 1; j < size; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return result;
}

SetCoverInstance EqualizeFrequencies(const SetCoverInstance& sc,
                                     int min_frequency) {
  const std::vector<int> freq = sc.Frequencies();
  int target = min_frequency;
  for (int f : freq) target = std::max(target, f);
  SetCoverInstance out = sc;
  for (int e = 0; e < sc.num_elements; ++e) {
    for (int copy = freq[e]; copy < target; ++copy) out.sets.push_back({e});
  }
  return out;
}

}  // namespace gerry
