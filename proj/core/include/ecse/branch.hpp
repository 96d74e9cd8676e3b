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

#ifndef ECSE_BRANCH_HPP_
#define ECSE_BRANCH_HPP_

#include <cstdint>
#include <vector>

#include "ecse/instance.hpp"

namespace ecse {

// Bit t set: agent a's level-t nominee is elected into C_t.
using FingerprintMask = std::uint64_t;

// Largest tau the branching solvers accept (fingerprints are 64-bit masks).
inline constexpr int kMaxBranchTau = 62;

// Fingerprints of agent a in ascending mask order: only levels where a
// nominates someone may be set; popcount >= y_a (egalitarian) or == y_a
// (equitable).
std::vector<FingerprintMask> EligibleFingerprints(const PeInstance& pe, int a);

struct BranchChild {
  FingerprintMask fingerprint = 0;
  PeInstance instance;
  // elected[t] is the candidate the fingerprint elects at t, or 0.
  std::vector<int> elected;
};

// One child per eligible fingerprint of agent a. In each child a is removed,
// every nomination of u_t(a) is erased at every level where a nominates, and
// for set bits k_t drops by one, x_t by the candidate's support and y_a' by
// one for each supporter a'. Agent indices above a shift down by one.
// Throws PreconditionError unless y_a > 0 and a has an eligible fingerprint.
std::vector<BranchChild> BranchChildren(const PeInstance& pe, int a);

struct BranchOptions {
  std::int64_t max_nodes = 0;  // 0 = unlimited; LimitError when exceeded
};

// Stats: nodes_expanded, fingerprints_tried, max_depth, max_children.
// Children that would drive some k_t below zero are discarded before they
// are counted as nodes.
SolveResult SolvePeGcseBranch(const PeInstance& pe,
                              const BranchOptions& options = {});
SolveResult SolvePeQcseBranch(const PeInstance& pe,
                              const BranchOptions& options = {});

// Lifts inst and dispatches on its mode.
SolveResult SolveBranch(const Instance& inst,
                        const BranchOptions& options = {});

}  // namespace ecse

#endif  // ECSE_BRANCH_HPP_
