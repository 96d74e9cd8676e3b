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

#ifndef ECSE_REDUCE_HPP_
#define ECSE_REDUCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ecse/committees.hpp"
#include "ecse/instance.hpp"

namespace ecse {

// Z(a): levels where some valid committee contains a's nomination.
struct CriticalityTable {
  std::vector<std::vector<int>> levels;  // Z(a), ascending level indices
  std::vector<bool> critical;            // |Z(a)| <= n * y

  int ZSize(int a) const { return static_cast<int>(levels[a].size()); }
};

// Largest score of a committee of size <= k containing c at level t, or -1
// when no such committee exists (k = 0 or c not nominated).
int BestScoreContaining(const std::vector<int>& support, int k, int c);

CriticalityTable ComputeCriticality(const Instance& inst);

struct RuleRecord {
  std::string rule;  // "no-valid-committee", "unreachable-y", "y-zero",
                     // "all-non-critical", "delete-level"
  int level = -1;    // original level index when the rule concerns one
  friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
};

struct KernelResult {
  bool resolved = false;
  Verdict verdict = Verdict::kNo;            // when resolved
  std::optional<CommitteeSequence> witness;  // when resolved yes
  Instance reduced;                          // when !resolved; renamed
  std::vector<int> surviving_levels;         // original indices of reduced
  std::vector<int> deleted_levels;           // original indices
  CandidateRenaming renaming;                // reduced ids -> original ids
  std::vector<RuleRecord> rule_log;
};

// Egalitarian data reduction for parameter n + y. Applies, in order: a
// feasibility check (some level without a valid committee, or an agent with
// |Z(a)| < y, gives no; y = 0 gives yes), then "every agent non-critical
// gives yes", then repeatedly deletes one level whose valid committees only
// use candidates of non-critical agents, refreshing criticality after each
// deletion. The reduced instance has at most n^2 * y levels and at most n
// candidates.
KernelResult KernelizeNy(const Instance& inst);

// Maps a solution of result.reduced back to the original instance. Deleted
// levels receive their top-k committee.
CommitteeSequence LiftKernelWitness(const Instance& original,
                                    const KernelResult& result,
                                    const CommitteeSequence& reduced_witness);

// Equitable rule for agents with y_a = 0: at each level, erase every
// nomination of the candidate such an agent nominates, then drop the agent.
// `kept` (optional) receives the surviving agents' input indices.
PeInstance RrPeQcseZeroY(const PeInstance& pe,
                         std::vector<int>* kept = nullptr);

}  // namespace ecse

#endif  // ECSE_REDUCE_HPP_
