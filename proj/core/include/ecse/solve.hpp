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

#ifndef ECSE_SOLVE_HPP_
#define ECSE_SOLVE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ecse/instance.hpp"
#include "ecse/oracle.hpp"

namespace ecse {

enum class Algorithm { kAuto, kBrute, kBranch, kDp, kTau2, kIp };

std::optional<Algorithm> ParseAlgorithm(std::string_view name);
const char* AlgorithmName(Algorithm algo);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  std::int64_t max_nodes = 0;  // branch and ip node budget; 0 = default
  OracleLimits oracle;
};

// kAuto tries, in order: the trivial rules, tau2 for equitable two-level
// instances, dp when n <= 12, branch when k * tau <= 24, ip, and brute force
// if ip runs out of budget. Adds stats["elapsed_micros"]. Throws
// PreconditionError when the chosen algorithm does not apply and LimitError
// when the question stays undecided.
SolveResult Solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace ecse

#endif  // ECSE_SOLVE_HPP_
