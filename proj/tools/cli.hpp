// Copyright 2026 The ecse Authors
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

#ifndef ECSE_TOOLS_CLI_HPP_
#define ECSE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ecse::cli {

// Exit codes besides the --exit-verdict ones (0 = yes, 1 = no).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // parse, usage or precondition error
inline constexpr int kExitUndecided = 3;  // guard, limit or budget exceeded

// Runs the command line `args` (without the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ecse::cli

#endif  // ECSE_TOOLS_CLI_HPP_
