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

#include "ecse/committees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace ecse {

Committee CandidateRenaming::ToOriginal(int t, const Committee& renamed) const {
  Committee original;
  original.reserve(renamed.size());
  for (int c : renamed) original.push_back(new_to_old[t][c]);
  std::sort(original.begin(), original.end());
  return original;
}

CommitteeSequence CandidateRenaming::ToOriginal(
    const CommitteeSequence& renamed) const {
  CommitteeSequence seq;
  for (int t = 0; t < renamed.tau(); ++t) {
    seq.committees.push_back(ToOriginal(t, renamed.committees[t]));
  }
  return seq;
}

RenamedInstance RenameCandidates(const Instance& inst) {
  RenamedInstance out;
  out.instance = inst;
  out.instance.m = 0;
  out.renaming.new_to_old.resize(inst.tau);
  std::vector<int> old_to_new(inst.m + 1, 0);
  for (int t = 0; t < inst.tau; ++t) {
    std::fill(old_to_new.begin(), old_to_new.end(), 0);
    std::vector<int>& back = out.renaming.new_to_old[t];
    back.assign(1, 0);
    for (int a = 0; a < inst.n; ++a) {
      const int c = inst.profile[t][a];
      if (c == kNoCandidate) continue;
      if (old_to_new[c] == 0) {
        old_to_new[c] = static_cast<int>(back.size());
        back.push_back(c);
      }
      out.instance.profile[t][a] = old_to_new[c];
    }
    out.instance.m =
        std::max(out.instance.m, static_cast<int>(back.size()) - 1);
  }
  return out;
}

std::vector<Committee> EnumerateValidCommittees(const Instance& inst, int t) {
  if (t < 0 || t >= inst.tau) {
    throw PreconditionError("level index out of range");
  }
  const std::vector<int> support = LevelSupport(inst.profile, inst.m, t);
  std::vector<int> nominated;
  for (int c = 1; c <= inst.m; ++c) {
    if (support[c] > 0) nominated.push_back(c);
  }
  const int d = static_cast<int>(nominated.size());
  if (d > kMaxEnumeratedCandidates) {
    throw LimitError("level " + std::to_string(t + 1) + " nominates " +
                     std::to_string(d) + " candidates; enumeration limit is " +
                     std::to_string(kMaxEnumeratedCandidates) +
                     " (rename candidates first)");
  }
  const int k = std::min(inst.k, d);

  // best[j][r]: largest support sum of r candidates among nominated[j..].
  std::vector<std::vector<int>> best(d + 1, std::vector<int>(k + 1, 0));
  for (int j = d - 1; j >= 0; --j) {
    std::vector<int> suffix;
    for (int i = j; i < d; ++i) suffix.push_back(support[nominated[i]]);
    std::sort(suffix.rbegin(), suffix.rend());
    for (int r = 1; r <= k; ++r) {
      best[j][r] =
          best[j][r - 1] +
          (r - 1 < static_cast<int>(suffix.size()) ? suffix[r - 1] : 0);
    }
  }

  std::vector<Committee> out;
  Committee current;
  std::function<void(int, int)> walk = [&](int next, int score) {
    if (score >= inst.x) {
      if (static_cast<std::int64_t>(out.size()) >= kMaxEnumeratedCommittees) {
        throw LimitError("more than " +
                         std::to_string(kMaxEnumeratedCommittees) +
                         " valid committees at level " + std::to_string(t + 1));
      }
      out.push_back(current);
    }
    const int room = k - static_cast<int>(current.size());
    if (room <= 0) return;
    for (int j = next; j < d; ++j) {
      // Every committee below this branch lies within current + nominated[j..].
      if (score + best[j][room] < inst.x) return;
      current.push_back(nominated[j]);
      walk(j + 1, score + support[nominated[j]]);
      current.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

std::uint64_t FingerprintOf(const Instance& inst, int t,
                            const Committee& committee) {
  std::uint64_t mask = 0;
  for (int a = 0; a < inst.n; ++a) {
    const int c = inst.profile[t][a];
    if (c != kNoCandidate &&
        std::binary_search(committee.begin(), committee.end(), c)) {
      mask |= std::uint64_t{1} << a;
    }
  }
  return mask;
}

std::vector<LevelFingerprint> LevelFingerprints(const Instance& inst, int t) {
  if (inst.n > 64) {
    throw LimitError("fingerprints need n <= 64");
  }
  std::map<std::uint64_t, Committee> by_mask;
  // Enumeration is lexicographic, so the first committee per mask is the
  // smallest one.
  for (Committee& committee : EnumerateValidCommittees(inst, t)) {
    by_mask.try_emplace(FingerprintOf(inst, t, committee),
                        std::move(committee));
  }
  std::vector<LevelFingerprint> out;
  out.reserve(by_mask.size());
  for (auto& [mask, committee] : by_mask) {
    out.push_back(LevelFingerprint{mask, std::move(committee)});
  }
  return out;
}

}  // namespace ecse
