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

#ifndef GERRY_TOOLS_CLI_H_
#define GERRY_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gerry {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitUsage = 2;

// Runs one `gerry` command. args excludes the program name. Returns the exit
// status: 0 once a command completes (whatever the YES/NO answer), 2 on
// usage, parse, or validation errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gerry

#endif  // GERRY_TOOLS_CLI_H_
