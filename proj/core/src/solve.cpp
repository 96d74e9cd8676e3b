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

#include "ecse/solve.hpp"

#include <chrono>
#include <vector>

#include "ecse/branch.hpp"
#include "ecse/dp.hpp"
#include "ecse/ip.hpp"
#include "ecse/tau2.hpp"
#include "ecse/trivial.hpp"

namespace ecse {
namespace {

constexpr struct {
  Algorithm algo;
  const char* name;
} kAlgorithms[] = {
    {Algorithm::kAuto, "auto"},     {Algorithm::kBrute, "brute"},
    {Algorithm::kBranch, "branch"}, {Algorithm::kDp, "dp"},
    {Algorithm::kTau2, "tau2"},     {Algorithm::kIp, "ip"},
};

SolveResult Run(const Instance& inst, const SolveOptions& options,
                Algorithm algo) {
  switch (algo) {
    case Algorithm::kBrute:
      return BruteSolve(inst, options.oracle);
    case Algorithm::kBranch: {
      BranchOptions branch;
      branch.max_nodes = options.max_nodes;
      return SolveBranch(inst, branch);
    }
    case Algorithm::kDp:
      return SolveDp(inst);
    case Algorithm::kTau2:
      return SolveQcseTau2(inst);
    case Algorithm::kIp: {
      IpOptions ip;
      if (options.max_nodes > 0) ip.max_nodes = options.max_nodes;
      return SolveIp(inst, ip);
    }
    case Algorithm::kAuto:
      break;
  }
  if (std::optional<SolveResult> trivial = TrivialSolve(inst)) return *trivial;
  if (inst.mode == Mode::kEquitable && inst.tau == 2) {
    return Run(inst, options, Algorithm::kTau2);
  }
  // Each exact back-end may hit its guard; the next one is tried instead.
  std::vector<Algorithm> chain;
  if (inst.n <= 12) chain.push_back(Algorithm::kDp);
  if (static_cast<long long>(inst.k) * inst.tau <= 24) {
    chain.push_back(Algorithm::kBranch);
  }
  chain.push_back(Algorithm::kIp);
  for (Algorithm next : chain) {
    try {
      return Run(inst, options, next);
    } catch (const LimitError&) {
    }
  }
  return Run(inst, options, Algorithm::kBrute);
}

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& entry : kAlgorithms) {
    if (name == entry.name) return entry.algo;
  }
  return std::nullopt;
}

const char* AlgorithmName(Algorithm algo) {
  for (const auto& entry : kAlgorithms) {
    if (entry.algo == algo) return entry.name;
  }
  return "unknown";
}

SolveResult Solve(const Instance& inst, const SolveOptions& options) {
  inst.Validate();
  const auto start = std::chrono::steady_clock::now();
  SolveResult result = Run(inst, options, options.algorithm);
  result.stats["elapsed_micros"] =
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace ecse
