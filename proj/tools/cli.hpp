// Copyright 2026 The tctp Authors
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

#ifndef TCTP_TOOLS_CLI_HPP_
#define TCTP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tctp::cli {

inline constexpr int kExitWin = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLose = 3;
inline constexpr int kExitSizeLimit = 4;

// Runs one `tctp` invocation; args excludes the program name.
int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tctp::cli

#endif  // TCTP_TOOLS_CLI_HPP_
