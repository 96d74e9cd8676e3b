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

#include "ecse/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ecse {
namespace {

struct Search {
  const Profile& profile;
  int n;
  int tau;
  std::vector<std::vector<Committee>> options;  // per level
  std::vector<int> target;                      // per agent
  Comparator cmp_y;
};

bool Elected(const Committee& committee, int c) {
  return c != kNoCandidate &&
         std::find(committee.begin(), committee.end(), c) != committee.end();
}

int Score(const Profile& profile, int t, const Committee& committee) {
  int score = 0;
  for (int c : profile[t]) score += Elected(committee, c);
  return score;
}

// Depth-first over the product of per-level option lists.
SolveResult RunSearch(const Search& search, const char* solver) {
  const int n = search.n;
  const int tau = search.tau;
  // Upper bound on what agent a can still gain from levels t.. onwards.
  std::vector<std::vector<int>> potential(tau + 1, std::vector<int>(n, 0));
  for (int t = tau - 1; t >= 0; --t) {
    for (int a = 0; a < n; ++a) {
      potential[t][a] =
          potential[t + 1][a] + (search.profile[t][a] != kNoCandidate);
    }
  }
  const bool has_upper = search.cmp_y != Comparator::kGe;
  const bool has_lower = search.cmp_y != Comparator::kLe;

  std::vector<int> score(n, 0);
  std::vector<int> choice(tau, -1);
  std::int64_t leaves = 0;
  std::int64_t nodes = 0;

  std::function<bool(int)> dfs = [&](int t) -> bool {
    ++nodes;
    for (int a = 0; a < n; ++a) {
      if (has_upper && score[a] > search.target[a]) return false;
      if (has_lower && score[a] + potential[t][a] < search.target[a]) {
        return false;
      }
    }
    if (t == tau) {
      ++leaves;
      for (int a = 0; a < n; ++a) {
        if (!Compare(score[a], search.cmp_y, search.target[a])) return false;
      }
      return true;
    }
    const auto& level_options = search.options[t];
    for (int i = 0; i < static_cast<int>(level_options.size()); ++i) {
      const Committee& committee = level_options[i];
      for (int a = 0; a < n; ++a) {
        score[a] += Elected(committee, search.profile[t][a]);
      }
      choice[t] = i;
      if (dfs(t + 1)) return true;
      for (int a = 0; a < n; ++a) {
        score[a] -= Elected(committee, search.profile[t][a]);
      }
    }
    return false;
  };

  const bool found = dfs(0);
  SolveResult result = NoResult(solver);
  if (found) {
    CommitteeSequence seq;
    for (int t = 0; t < tau; ++t) {
      seq.committees.push_back(search.options[t][choice[t]]);
    }
    result = YesResult(std::move(seq), solver);
  }
  std::int64_t listed = 0;
  for (const auto& level_options : search.options)
    listed += level_options.size();
  result.stats["branches"] = nodes;
  result.stats["committees_enumerated"] = listed;
  result.stats["leaves"] = leaves;
  return result;
}

// Subsets of `pool` (sorted) accepted by `keep`, sorted lexicographically.
std::vector<Committee> Subsets(
    const std::vector<int>& pool,
    const std::function<bool(const Committee&)>& keep, std::int64_t cap,
    int t) {
  const int d = static_cast<int>(pool.size());
  std::vector<Committee> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    Committee committee;
    for (int j = 0; j < d; ++j) {
      if (mask >> j & 1) committee.push_back(pool[j]);
    }
    if (!keep(committee)) continue;
    if (static_cast<std::int64_t>(out.size()) >= cap) {
      throw LimitError("oracle: more than " + std::to_string(cap) +
                       " committees at level " + std::to_string(t + 1));
    }
    out.push_back(std::move(committee));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Nominated(const Profile& profile, int t) {
  std::set<int> distinct;
  for (int c : profile[t]) {
    if (c != kNoCandidate) distinct.insert(c);
  }
  return {distinct.begin(), distinct.end()};
}

void CheckShape(int n, int tau, const OracleLimits& limits) {
  if (n > limits.max_n || tau > limits.max_tau) {
    throw LimitError("oracle limits exceeded: n=" + std::to_string(n) +
                     " tau=" + std::to_string(tau) +
                     " (max n=" + std::to_string(limits.max_n) +
                     ", tau=" + std::to_string(limits.max_tau) + ")");
  }
}

std::vector<int> NominatedWithinLimits(const Profile& profile, int t,
                                       const OracleLimits& limits) {
  std::vector<int> pool = Nominated(profile, t);
  if (static_cast<int>(pool.size()) > limits.max_m) {
    throw LimitError("oracle limits exceeded: level " + std::to_string(t + 1) +
                     " nominates " + std::to_string(pool.size()) +
                     " candidates (max " + std::to_string(limits.max_m) + ")");
  }
  return pool;
}

}  // namespace

SolveResult BruteSolve(const Instance& inst, const OracleLimits& limits) {
  inst.Validate();
  CheckShape(inst.n, inst.tau, limits);
  Search search{inst.profile, inst.n, inst.tau, {}, {}, {}};
  search.target.assign(inst.n, inst.y);
  search.cmp_y =
      inst.mode == Mode::kEgalitarian ? Comparator::kGe : Comparator::kEq;
  for (int t = 0; t < inst.tau; ++t) {
    const std::vector<int> pool =
        NominatedWithinLimits(inst.profile, t, limits);
    search.options.push_back(Subsets(
        pool,
        [&](const Committee& committee) {
          return static_cast<int>(committee.size()) <= inst.k &&
                 Score(inst.profile, t, committee) >= inst.x;
        },
        limits.max_committees_per_level, t));
  }
  return RunSearch(search, "brute");
}

SolveResult BruteSolvePe(const PeInstance& pe, const OracleLimits& limits) {
  pe.Validate();
  CheckShape(pe.n, pe.tau, limits);
  Search search{pe.profile, pe.n, pe.tau, {}, pe.yvec, {}};
  search.cmp_y =
      pe.mode == Mode::kEgalitarian ? Comparator::kGe : Comparator::kEq;
  for (int t = 0; t < pe.tau; ++t) {
    const std::vector<int> pool = NominatedWithinLimits(pe.profile, t, limits);
    search.options.push_back(Subsets(
        pool,
        [&](const Committee& committee) {
          return static_cast<int>(committee.size()) <= pe.kvec[t] &&
                 Score(pe.profile, t, committee) >= pe.xvec[t];
        },
        limits.max_committees_per_level, t));
  }
  return RunSearch(search, "brute-pe");
}

SolveResult BruteSolveGeneralized(const Instance& inst,
                                  const ComparatorSpec& spec,
                                  const OracleLimits& limits) {
  inst.Validate();
  CheckShape(inst.n, inst.tau, limits);
  if (inst.m > limits.max_m) {
    throw LimitError("oracle limits exceeded: m=" + std::to_string(inst.m));
  }
  std::vector<int> all(inst.m);
  for (int c = 1; c <= inst.m; ++c) all[c - 1] = c;
  Search search{inst.profile, inst.n, inst.tau, {}, {}, spec.cmp_y};
  search.target.assign(inst.n, inst.y);
  for (int t = 0; t < inst.tau; ++t) {
    search.options.push_back(Subsets(
        all,
        [&](const Committee& committee) {
          return Compare(static_cast<int>(committee.size()), spec.cmp_k,
                         inst.k) &&
                 Compare(Score(inst.profile, t, committee), spec.cmp_x, inst.x);
        },
        limits.max_committees_per_level, t));
  }
  return RunSearch(search, "brute-generalized");
}

}  // namespace ecse
