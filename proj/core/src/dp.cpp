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

#include "ecse/dp.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecse/committees.hpp"

namespace ecse {
namespace {

struct BackPointer {
  std::uint64_t predecessor;
  int fingerprint;  // index into the level's fingerprint list
};

std::vector<std::uint64_t> DigitWeights(int n, int y) {
  std::vector<std::uint64_t> weights(n);
  const std::uint64_t base = static_cast<std::uint64_t>(y) + 1;
  std::uint64_t weight = 1;
  for (int a = 0; a < n; ++a) {
    weights[a] = weight;
    if (weight > std::numeric_limits<std::int64_t>::max() / base) {
      throw LimitError("score-vector key space exceeds 63 bits");
    }
    weight *= base;
  }
  return weights;
}

}  // namespace

SolveResult SolveDp(const Instance& original, const DpOptions& options) {
  original.Validate();
  if (original.n > kMaxDpAgents) {
    throw LimitError("dp supports at most " + std::to_string(kMaxDpAgents) +
                     " agents");
  }
  const RenamedInstance renamed = RenameCandidates(original);
  const Instance& inst = renamed.instance;
  const int n = inst.n;
  const int y = inst.y;
  const bool capped = inst.mode == Mode::kEgalitarian;
  const std::vector<std::uint64_t> weights = DigitWeights(n, y);

  std::vector<std::vector<LevelFingerprint>> fingerprints(inst.tau);
  std::vector<std::unordered_map<std::uint64_t, BackPointer>> table(inst.tau);
  std::vector<std::uint64_t> frontier = {0};
  std::int64_t entries = 0;
  std::int64_t max_level = 0;
  std::int64_t transitions = 0;
  std::vector<int> digits(n);

  for (int t = 0; t < inst.tau && !frontier.empty(); ++t) {
    fingerprints[t] = LevelFingerprints(inst, t);
    auto& level = table[t];
    for (std::uint64_t key : frontier) {
      std::uint64_t rest = key;
      for (int a = 0; a < n; ++a) {
        digits[a] =
            static_cast<int>(rest % (static_cast<std::uint64_t>(y) + 1));
        rest /= static_cast<std::uint64_t>(y) + 1;
      }
      for (int f = 0; f < static_cast<int>(fingerprints[t].size()); ++f) {
        ++transitions;
        const std::uint64_t mask = fingerprints[t][f].mask;
        std::uint64_t next = key;
        bool pruned = false;
        for (int a = 0; a < n && !pruned; ++a) {
          if (!((mask >> a) & 1)) continue;
          if (digits[a] < y) {
            next += weights[a];
          } else if (!capped) {
            pruned = true;
          }
        }
        if (pruned) continue;
        if (level.emplace(next, BackPointer{key, f}).second &&
            ++entries > options.max_entries) {
          throw LimitError("dp table guard exceeded");
        }
      }
    }
    max_level = std::max<std::int64_t>(max_level, level.size());
    frontier.clear();
    for (const auto& [next, pointer] : level) frontier.push_back(next);
    std::sort(frontier.begin(), frontier.end());
  }

  std::uint64_t target = 0;
  for (int a = 0; a < n; ++a) target += weights[a] * y;

  SolveResult result;
  const auto& last = table[inst.tau - 1];
  if (last.count(target)) {
    CommitteeSequence seq;
    seq.committees.resize(inst.tau);
    std::uint64_t key = target;
    for (int t = inst.tau - 1; t >= 0; --t) {
      const BackPointer& pointer = table[t].at(key);
      seq.committees[t] = fingerprints[t][pointer.fingerprint].witness;
      key = pointer.predecessor;
    }
    result = YesResult(renamed.renaming.ToOriginal(seq), "dp");
  } else {
    result = NoResult("dp");
  }
  result.stats["table_entries"] = entries;
  result.stats["max_level_entries"] = max_level;
  result.stats["transitions"] = transitions;
  return result;
}

}  // namespace ecse
