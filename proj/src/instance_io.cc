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

#include "gerry/instance_io.h"

#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "text_lines.h"

namespace gerry {
namespace {

using internal::Directive;
using internal::ExpectArity;
using internal::ParseIndex;
using internal::ParseInteger;

constexpr int kMaxCount = 1 << 24;
constexpr int64_t kMaxTableSize = int64_t{1} << 27;

struct Header {
  int n = 0;
  int candidates = 0;
  int preferred = 0;
  int k = 0;
  Semantics mode = Semantics::kStrict;
};

Header ParseHeader(const Directive& d) {
  if (d.tokens[0] != "n") {
    throw ParseError(d.line, "expected header line 'n <n> c <c> p <p> k <k> "
                             "mode <strict|tiebreak>'");
  }
  if (d.tokens.size() % 2 != 0) {
    throw ParseError(d.line, "header fields must be key/value pairs");
  }
  std::map<std::string, std::string> fields;
  for (size_t i = 0; i < d.tokens.size(); i += 2) {
    if (!fields.emplace(d.tokens[i], d.tokens[i + 1]).second) {
      throw ParseError(d.line, "duplicate header field '" + d.tokens[i] + "'");
    }
  }
  Header h;
  auto integer = [&](const std::string& key, int min) {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw ParseError(d.line, "header is missing '" + key + "'");
    }
    Directive single{d.line, {key, it->second}};
    return static_cast<int>(ParseInteger(single, 1, min, kMaxCount));
  };
  h.n = integer("n", 1);
  h.candidates = integer("c", 1);
  h.preferred = integer("p", 1) - 1;
  h.k = integer("k", 0);
  auto mode = fields.find("mode");
  if (mode == fields.end()) throw ParseError(d.line, "header is missing 'mode'");
  if (mode->second == "strict") {
    h.mode = Semantics::kStrict;
  } else if (mode->second == "tiebreak") {
    h.mode = Semantics::kTiebreak;
  } else {
    throw ParseError(d.line, "unknown mode '" + mode->second + "'");
  }
  if (fields.size() != 5) throw ParseError(d.line, "unknown header field");
  if (int64_t{h.n} * h.candidates > kMaxTableSize) {
    throw ParseError(d.line, "weight table too large");
  }
  return h;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const std::vector<Directive> lines = internal::Tokenize(text);
  internal::ExpectVersionHeader(lines, "gm");
  if (lines.size() < 2) throw ParseError(lines[0].line, "missing header line");
  const Header h = ParseHeader(lines[1]);

  RawInstance raw;
  raw.num_vertices = h.n;
  raw.num_candidates = h.candidates;
  raw.preferred = h.preferred;
  raw.num_districts = h.k;
  raw.mode = h.mode;
  raw.weights.assign(h.n, std::vector<Votes>(h.candidates, 0));

  std::set<std::pair<int, int>> weight_seen;
  bool have_tiebreak = false;
  for (size_t i = 2; i < lines.size(); ++i) {
    const Directive& d = lines[i];
    const std::string& verb = d.tokens[0];
    if (verb == "e") {
      ExpectArity(d, 3);
      raw.edges.emplace_back(ParseIndex(d, 1, h.n) - 1,
                             ParseIndex(d, 2, h.n) - 1);
    } else if (verb == "w") {
      ExpectArity(d, 4);
      const int v = ParseIndex(d, 1, h.n) - 1;
      const int c = ParseIndex(d, 2, h.candidates) - 1;
      const Votes votes = ParseInteger(d, 3, 0, std::numeric_limits<int32_t>::max());
      if (!weight_seen.emplace(v, c).second) {
        throw ParseError(d.line, "duplicate weight entry");
      }
      raw.weights[v][c] = votes;
    } else if (verb == "tb") {
      if (have_tiebreak) throw ParseError(d.line, "duplicate 'tb' line");
      ExpectArity(d, static_cast<size_t>(h.candidates) + 1);
      for (int j = 1; j <= h.candidates; ++j) {
        raw.tiebreak_order.push_back(ParseIndex(d, j, h.candidates) - 1);
      }
      have_tiebreak = true;
    } else {
      throw ParseError(d.line, "unknown directive '" + verb + "'");
    }
  }
  return Instance::FromRaw(std::move(raw));
}

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  out << "gm 1\n";
  out << "n " << inst.num_vertices() << " c " << inst.num_candidates()
      << " p " << inst.preferred() + 1 << " k " << inst.num_districts()
      << " mode " << SemanticsName(inst.mode()) << "\n";
  if (!inst.has_default_tiebreak()) {
    out << "tb";
    for (int c : inst.tiebreak_order()) out << " " << c + 1;
    out << "\n";
  }
  for (const auto& [u, v] : inst.edges()) {
    out << "e " << u + 1 << " " << v + 1 << "\n";
  }
  for (int v = 0; v < inst.num_vertices(); ++v) {
    const auto w = inst.weights(v);
    for (int c = 0; c < inst.num_candidates(); ++c) {
      if (w[c] != 0) out << "w " << v + 1 << " " << c + 1 << " " << w[c] << "\n";
    }
  }
  return out.str();
}

DistrictPartition ParsePartition(std::string_view text) {
  const std::vector<Directive> lines = internal::Tokenize(text);
  internal::ExpectVersionHeader(lines, "gmpart");
  std::map<int, int> entries;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Directive& d = lines[i];
    if (d.tokens[0] != "d") {
      throw ParseError(d.line, "unknown directive '" + d.tokens[0] + "'");
    }
    ExpectArity(d, 3);
    const int v = ParseIndex(d, 1, kMaxCount);
    const int district = ParseIndex(d, 2, kMaxCount);
    if (!entries.emplace(v, district).second) {
      throw ParseError(d.line, "vertex " + std::to_string(v) + " assigned twice");
    }
  }
  DistrictPartition part;
  int expected = 1;
  for (const auto& [v, district] : entries) {
    if (v != expected) {
      throw ParseError(lines.back().line,
                       "vertex " + std::to_string(expected) + " unassigned");
    }
    part.assignment.push_back(district - 1);
    ++expected;
  }
  return part;
}

std::string SerializePartition(const DistrictPartition& part) {
  std::ostringstream out;
  out << "gmpart 1\n";
  for (size_t v = 0; v < part.assignment.size(); ++v) {
    out << "d " << v + 1 << " " << part.assignment[v] + 1 << "\n";
  }
  return out.str();
}

}  // namespace gerry
