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

// Line tokenizer shared by the text formats. Internal to the library.

#ifndef GERRY_SRC_TEXT_LINES_H_
#define GERRY_SRC_TEXT_LINES_H_

#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gerry/instance_io.h"

namespace gerry::internal {

struct Directive {
  int line = 0;
  std::vector<std::string> tokens;
};

// Splits `text` into non-empty directives, dropping `#` comments.
inline std::vector<Directive> Tokenize(std::string_view text) {
  std::vector<Directive> out;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Directive d{line_number, {}};
    std::istringstream words{std::string(line)};
    for (std::string word; words >> word;) d.tokens.push_back(word);
    if (!d.tokens.empty()) out.push_back(std::move(d));
    pos = end + 1;
  }
  return out;
}

inline int64_t ParseInteger(const Directive& d, size_t index, int64_t min,
                            int64_t max) {
  if (index >= d.tokens.size()) {
    throw ParseError(d.line, "missing integer field");
  }
  const std::string& token = d.tokens[index];
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(d.line, "expected integer, got '" + token + "'");
  }
  if (value < min || value > max) {
    throw ParseError(d.line, "value " + token + " out of range");
  }
  return value;
}

inline int ParseIndex(const Directive& d, size_t index, int max) {
  return static_cast<int>(ParseInteger(d, index, 1, max));
}

inline void ExpectArity(const Directive& d, size_t count) {
  if (d.tokens.size() != count) {
    throw ParseError(d.line, "'" + d.tokens[0] + "' expects " +
                                 std::to_string(count - 1) + " fields");
  }
}

inline void ExpectVersionHeader(const std::vector<Directive>& lines,
                                std::string_view magic) {
  if (lines.empty()) throw ParseError(0, "empty input");
  const Directive& first = lines.front();
  if (first.tokens[0] != magic) {
    throw ParseError(first.line,
                     "expected '" + std::string(magic) + " 1' header");
  }
  if (first.tokens.size() != 2 || first.tokens[1] != "1") {
    throw ParseError(first.line, "unsupported " + std::string(magic) +
                                     " version");
  }
}

}  // namespace gerry::internal

#endif  // GERRY_SRC_TEXT_LINES_H_
