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

// Line-oriented text formats for instances and partitions.
//
//   gm 1
//   n <n> c <candidates> p <preferred> k <k> mode <strict|tiebreak>
//   tb <c1> ... <cC>        # optional tie-break priority, highest first
//   e <u> <v>               # one per edge
//   w <v> <cand> <votes>    # sparse; omitted entries are 0
//
//   gmpart 1
//   d <v> <district>        # one per vertex
//
// Indices in text are 1-based. `#` starts a comment. Serialization is
// canonical: header, optional tb line, edges in instance order, then nonzero
// weights ordered by vertex and candidate.

#ifndef GERRY_INSTANCE_IO_H_
#define GERRY_INSTANCE_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "gerry/model.h"

namespace gerry {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws ParseError on syntax errors and ValidationError when the text is
// well formed but describes an invalid instance.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

DistrictPartition ParsePartition(std::string_view text);
std::string SerializePartition(const DistrictPartition& part);

}  // namespace gerry

#endif  // GERRY_INSTANCE_IO_H_
