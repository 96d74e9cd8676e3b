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

#include "ecse/trivial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ecse {
namespace {

SolveResult Tag(SolveResult result, const char* rule) {
  result.stats[std::string("trivial.") + rule] = 1;
  return result;
}

CommitteeSequence Empty(int tau) {
  CommitteeSequence seq;
  seq.committees.assign(tau, {});
  return seq;
}

Committee AllCandidates(int m) {
  Committee all(m);
  std::iota(all.begin(), all.end(), 1);
  return all;
}

}  // namespace

std::optional<SolveResult> TrivialSolve(const Instance& inst) {
  const char* kSolver = "trivial";
  if (inst.y > inst.tau) {
    return Tag(NoResult(kSolver), "y_over_tau");
  }

  if (inst.y == 0 && inst.mode == Mode::kEgalitarian) {
    CommitteeSequence seq;
    for (int t = 0; t < inst.tau; ++t) {
      const std::vector<int> support = LevelSupport(inst.profile, inst.m, t);
      Committee top = TopSupported(support, inst.k);
      if (SupportOf(support, top) < inst.x) {
        return Tag(NoResult(kSolver), "y_zero_egalitarian");
      }
      seq.committees.push_back(std::move(top));
    }
    return Tag(YesResult(std::move(seq), kSolver), "y_zero_egalitarian");
  }

  if (inst.y == 0 && inst.mode == Mode::kEquitable) {
    // No nominated candidate may be elected, so every level scores 0.
    if (inst.x == 0) {
      return Tag(YesResult(Empty(inst.tau), kSolver), "y_zero_equitable");
    }
    return Tag(NoResult(kSolver), "y_zero_equitable");
  }

  if (inst.y == inst.tau) {
    // Every nomination must be elected.
    CommitteeSequence seq;
    for (int t = 0; t < inst.tau; ++t) {
      std::set<int> nominated;
      for (int c : inst.profile[t]) {
        if (c == kNoCandidate) return Tag(NoResult(kSolver), "y_equals_tau");
        nominated.insert(c);
      }
      if (static_cast<int>(nominated.size()) > inst.k || inst.n < inst.x) {
        return Tag(NoResult(kSolver), "y_equals_tau");
      }
      seq.committees.emplace_back(nominated.begin(), nominated.end());
    }
    return Tag(YesResult(std::move(seq), kSolver), "y_equals_tau");
  }

  if (inst.mode == Mode::kEgalitarian && inst.k >= inst.m) {
    for (int t = 0; t < inst.tau; ++t) {
      const int nominating = static_cast<int>(
          std::count_if(inst.profile[t].begin(), inst.profile[t].end(),
                        [](int c) { return c != kNoCandidate; }));
      if (nominating < inst.x) return Tag(NoResult(kSolver), "k_at_least_m");
    }
    for (int a = 0; a < inst.n; ++a) {
      int levels = 0;
      for (int t = 0; t < inst.tau; ++t) {
        levels += inst.profile[t][a] != kNoCandidate;
      }
      if (levels < inst.y) return Tag(NoResult(kSolver), "k_at_least_m");
    }
    CommitteeSequence seq;
    seq.committees.assign(inst.tau, AllCandidates(inst.m));
    return Tag(YesResult(std::move(seq), kSolver), "k_at_least_m");
  }
  return std::nullopt;
}

std::optional<SolveResult> SolveGeneralizedExtreme(const Instance& inst,
                                                   const ComparatorSpec& spec) {
  const char* kSolver = "extreme";
  const ComparatorSpec all_le{Comparator::kLe, Comparator::kLe,
                              Comparator::kLe};
  const ComparatorSpec all_ge{Comparator::kGe, Comparator::kGe,
                              Comparator::kGe};
  if (spec == all_le) {
    // Sizes, scores and agent scores are all 0 under empty committees.
    return YesResult(Empty(inst.tau), kSolver);
  }
  if (spec == all_ge) {
    // Scores are monotone, so C_t = C dominates every other choice.
    if (inst.k > inst.m) return NoResult(kSolver);
    CommitteeSequence seq;
    seq.committees.assign(inst.tau, AllCandidates(inst.m));
    if (VerifyGeneralized(inst, spec, seq).feasible) {
      return YesResult(std::move(seq), kSolver);
    }
    return NoResult(kSolver);
  }
  return std::nullopt;
}

}  // namespace ecse
