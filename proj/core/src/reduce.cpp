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

#include "ecse/reduce.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ecse {
namespace {

// Greedy maximum-score committee of size <= k that contains c.
Committee BestContaining(const std::vector<int>& support, int k, int c) {
  std::vector<int> others = support;
  others[c] = 0;
  Committee committee = TopSupported(others, k - 1);
  committee.push_back(c);
  std::sort(committee.begin(), committee.end());
  return committee;
}

std::vector<std::vector<int>> AllSupports(const Instance& inst) {
  std::vector<std::vector<int>> supports;
  supports.reserve(inst.tau);
  for (int t = 0; t < inst.tau; ++t) {
    supports.push_back(LevelSupport(inst.profile, inst.m, t));
  }
  return supports;
}

bool HasValidCommittee(const std::vector<int>& support, int k, int x) {
  return SupportOf(support, TopSupported(support, k)) >= x;
}

CriticalityTable Criticality(const Instance& inst,
                             const std::vector<std::vector<int>>& supports) {
  CriticalityTable table;
  table.levels.resize(inst.n);
  table.critical.resize(inst.n);
  for (int t = 0; t < inst.tau; ++t) {
    for (int a = 0; a < inst.n; ++a) {
      const int c = inst.profile[t][a];
      if (c != kNoCandidate &&
          BestScoreContaining(supports[t], inst.k, c) >= inst.x) {
        table.levels[a].push_back(t);
      }
    }
  }
  const long long bound = static_cast<long long>(inst.n) * inst.y;
  for (int a = 0; a < inst.n; ++a) {
    table.critical[a] = static_cast<long long>(table.levels[a].size()) <= bound;
  }
  return table;
}

Instance KeepLevels(const Instance& inst, const std::vector<int>& keep) {
  Instance out = inst;
  out.profile.clear();
  for (int t : keep) out.profile.push_back(inst.profile[t]);
  out.tau = static_cast<int>(keep.size());
  return out;
}

}  // namespace

int BestScoreContaining(const std::vector<int>& support, int k, int c) {
  if (k < 1 || c <= 0 || c >= static_cast<int>(support.size()) ||
      support[c] == 0) {
    return -1;
  }
  return SupportOf(support, BestContaining(support, k, c));
}

CriticalityTable ComputeCriticality(const Instance& inst) {
  return Criticality(inst, AllSupports(inst));
}

KernelResult KernelizeNy(const Instance& inst) {
  inst.Validate();
  if (inst.mode != Mode::kEgalitarian) {
    throw PreconditionError("KernelizeNy requires an egalitarian instance");
  }
  KernelResult result;
  RenamedInstance renamed = RenameCandidates(inst);
  const Instance& base = renamed.instance;
  const std::vector<std::vector<int>> base_supports = AllSupports(base);

  auto top_k_sequence = [&](const std::vector<int>& levels) {
    CommitteeSequence seq;
    for (int t : levels) {
      seq.committees.push_back(TopSupported(base_supports[t], base.k));
    }
    return seq;
  };
  auto resolve = [&](Verdict verdict, std::optional<CommitteeSequence> seq) {
    result.resolved = true;
    result.verdict = verdict;
    if (seq) result.witness = renamed.renaming.ToOriginal(*seq);
    return result;
  };

  std::vector<int> all_levels(base.tau);
  std::iota(all_levels.begin(), all_levels.end(), 0);

  for (int t = 0; t < base.tau; ++t) {
    if (!HasValidCommittee(base_supports[t], base.k, base.x)) {
      result.rule_log.push_back({"no-valid-committee", t});
      return resolve(Verdict::kNo, std::nullopt);
    }
  }
  if (base.y == 0) {
    result.rule_log.push_back({"y-zero", -1});
    return resolve(Verdict::kYes, top_k_sequence(all_levels));
  }
  {
    const CriticalityTable table = Criticality(base, base_supports);
    for (int a = 0; a < base.n; ++a) {
      if (table.ZSize(a) < base.y) {
        result.rule_log.push_back({"unreachable-y", -1});
        return resolve(Verdict::kNo, std::nullopt);
      }
    }
  }

  std::vector<int> surviving = all_levels;
  while (true) {
    const Instance current = KeepLevels(base, surviving);
    std::vector<std::vector<int>> supports;
    for (int t : surviving) supports.push_back(base_supports[t]);
    const CriticalityTable table = Criticality(current, supports);

    if (std::none_of(table.critical.begin(), table.critical.end(),
                     [](bool b) { return b; })) {
      result.rule_log.push_back({"all-non-critical", -1});
      // Satisfy agents one at a time on their first y unused Z-levels; each
      // agent keeps more than (n - i) * y usable levels when its turn comes.
      CommitteeSequence seq = top_k_sequence(all_levels);
      std::vector<bool> used(current.tau, false);
      for (int a = 0; a < current.n; ++a) {
        int picked = 0;
        for (int i : table.levels[a]) {
          if (picked == current.y) break;
          if (used[i]) continue;
          used[i] = true;
          ++picked;
          seq.committees[surviving[i]] =
              BestContaining(supports[i], current.k, current.profile[i][a]);
        }
      }
      return resolve(Verdict::kYes, std::move(seq));
    }

    int removable = -1;
    for (int i = 0; i < current.tau && removable < 0; ++i) {
      bool blocked = false;
      for (int a = 0; a < current.n && !blocked; ++a) {
        const int c = current.profile[i][a];
        blocked = table.critical[a] && c != kNoCandidate &&
                  BestScoreContaining(supports[i], current.k, c) >= current.x;
      }
      if (!blocked) removable = i;
    }
    if (removable < 0) break;
    result.rule_log.push_back({"delete-level", surviving[removable]});
    result.deleted_levels.push_back(surviving[removable]);
    surviving.erase(surviving.begin() + removable);
  }

  result.resolved = false;
  result.surviving_levels = surviving;
  result.reduced = KeepLevels(base, surviving);
  result.reduced.m = 0;
  for (int t : surviving) {
    result.renaming.new_to_old.push_back(renamed.renaming.new_to_old[t]);
    result.reduced.m =
        std::max(result.reduced.m,
                 static_cast<int>(renamed.renaming.new_to_old[t].size()) - 1);
  }
  std::sort(result.deleted_levels.begin(), result.deleted_levels.end());
  return result;
}

CommitteeSequence LiftKernelWitness(const Instance& original,
                                    const KernelResult& result,
                                    const CommitteeSequence& reduced_witness) {
  if (result.resolved) {
    throw PreconditionError("kernel was resolved; nothing to lift");
  }
  if (reduced_witness.tau() !=
      static_cast<int>(result.surviving_levels.size())) {
    throw PreconditionError("witness does not match the reduced instance");
  }
  CommitteeSequence seq;
  seq.committees.resize(original.tau);
  for (int t : result.deleted_levels) {
    seq.committees[t] =
        TopSupported(LevelSupport(original.profile, original.m, t), original.k);
  }
  for (int i = 0; i < reduced_witness.tau(); ++i) {
    seq.committees[result.surviving_levels[i]] =
        result.renaming.ToOriginal(i, reduced_witness.committees[i]);
  }
  return seq;
}

PeInstance RrPeQcseZeroY(const PeInstance& pe, std::vector<int>* kept) {
  if (pe.mode != Mode::kEquitable) {
    throw PreconditionError("the y_a = 0 rule applies to equitable instances");
  }
  PeInstance out = pe;
  std::vector<int> survivors;
  for (int a = 0; a < pe.n; ++a) {
    if (pe.yvec[a] != 0) {
      survivors.push_back(a);
      continue;
    }
    for (int t = 0; t < pe.tau; ++t) {
      const int c = pe.profile[t][a];
      if (c == kNoCandidate) continue;
      for (int& nomination : out.profile[t]) {
        if (nomination == c) nomination = kNoCandidate;
      }
    }
  }
  Profile profile(pe.tau);
  std::vector<int> yvec;
  for (int a : survivors) {
    yvec.push_back(pe.yvec[a]);
    for (int t = 0; t < pe.tau; ++t) profile[t].push_back(out.profile[t][a]);
  }
  out.profile = std::move(profile);
  out.yvec = std::move(yvec);
  out.n = static_cast<int>(survivors.size());
  if (kept) *kept = std::move(survivors);
  return out;
}

}  // namespace ecse
