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

#include "ecse/branch.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ecse/reduce.hpp"

namespace ecse {
namespace {

FingerprintMask NominationMask(const PeInstance& pe, int a) {
  FingerprintMask mask = 0;
  for (int t = 0; t < pe.tau; ++t) {
    if (pe.profile[t][a] != kNoCandidate) mask |= FingerprintMask{1} << t;
  }
  return mask;
}

bool Eligible(Mode mode, int popcount, int y) {
  return mode == Mode::kEgalitarian ? popcount >= y : popcount == y;
}

BranchChild ApplyFingerprint(const PeInstance& pe, int a,
                             FingerprintMask mask) {
  BranchChild child;
  child.fingerprint = mask;
  child.elected.assign(pe.tau, kNoCandidate);
  PeInstance& out = child.instance;
  out = pe;
  for (int t = 0; t < pe.tau; ++t) {
    const int c = pe.profile[t][a];
    if (c == kNoCandidate) continue;
    const bool elect = (mask >> t) & 1;
    int supporters = 0;
    for (int b = 0; b < pe.n; ++b) {
      if (pe.profile[t][b] != c) continue;
      ++supporters;
      if (elect) --out.yvec[b];
      out.profile[t][b] = kNoCandidate;
    }
    if (elect) {
      out.xvec[t] -= supporters;
      out.kvec[t] -= 1;
      child.elected[t] = c;
    }
  }
  for (int t = 0; t < pe.tau; ++t)
    out.profile[t].erase(out.profile[t].begin() + a);
  out.yvec.erase(out.yvec.begin() + a);
  out.n -= 1;
  return child;
}

int Binomial(int p, int r) {
  if (r < 0 || r > p) return 0;
  long long value = 1;
  for (int i = 1; i <= r; ++i) value = value * (p - r + i) / i;
  return static_cast<int>(value);
}

int EligibleCount(Mode mode, int nominated, int y) {
  if (mode == Mode::kEquitable) return Binomial(nominated, y);
  int total = 0;
  for (int j = std::max(y, 0); j <= nominated; ++j)
    total += Binomial(nominated, j);
  return total;
}

void CheckBranchable(const PeInstance& pe) {
  pe.Validate();
  if (pe.tau > kMaxBranchTau) {
    throw LimitError("branching supports at most " +
                     std::to_string(kMaxBranchTau) + " levels");
  }
}

class Search {
 public:
  Search(const PeInstance& root, const BranchOptions& options)
      : options_(options),
        solver_(root.mode == Mode::kEgalitarian ? "branch-gcse"
                                                : "branch-qcse") {
    accumulated_.resize(root.tau);
  }

  SolveResult Run(const PeInstance& root) {
    const bool yes =
        root.mode == Mode::kEgalitarian ? Gcse(root, 0) : Qcse(root, 0);
    SolveResult result = yes ? YesResult(witness_, solver_) : NoResult(solver_);
    result.stats["nodes_expanded"] = nodes_;
    result.stats["fingerprints_tried"] = fingerprints_;
    result.stats["max_depth"] = max_depth_;
    result.stats["max_children"] = max_children_;
    return result;
  }

 private:
  void Enter(int depth) {
    ++nodes_;
    if (options_.max_nodes > 0 && nodes_ > options_.max_nodes) {
      throw LimitError("branching node budget exceeded");
    }
    max_depth_ = std::max<std::int64_t>(max_depth_, depth);
  }

  static bool BudgetOverrun(const PeInstance& pe) {
    return std::any_of(pe.kvec.begin(), pe.kvec.end(),
                       [](int k) { return k < 0; });
  }

  // Agent with the fewest eligible fingerprints among those with y_a > 0,
  // ties by lowest index; -1 if none.
  static int PickAgent(const PeInstance& pe) {
    int best = -1;
    int best_count = 0;
    for (int a = 0; a < pe.n; ++a) {
      if (pe.yvec[a] <= 0) continue;
      const int count = EligibleCount(
          pe.mode, std::popcount(NominationMask(pe, a)), pe.yvec[a]);
      if (best < 0 || count < best_count) {
        best = a;
        best_count = count;
      }
    }
    return best;
  }

  bool Children(const PeInstance& pe, int depth, int a,
                bool (Search::*recurse)(const PeInstance&, int)) {
    const std::vector<FingerprintMask> masks = EligibleFingerprints(pe, a);
    max_children_ = std::max<std::int64_t>(max_children_, masks.size());
    for (FingerprintMask mask : masks) {
      ++fingerprints_;
      BranchChild child = ApplyFingerprint(pe, a, mask);
      if (BudgetOverrun(child.instance)) continue;
      for (int t = 0; t < pe.tau; ++t) {
        if (child.elected[t] != kNoCandidate) {
          accumulated_[t].push_back(child.elected[t]);
        }
      }
      if ((this->*recurse)(child.instance, depth + 1)) return true;
      for (int t = 0; t < pe.tau; ++t) {
        if (child.elected[t] != kNoCandidate) accumulated_[t].pop_back();
      }
    }
    return false;
  }

  bool Gcse(const PeInstance& pe, int depth) {
    Enter(depth);
    if (BudgetOverrun(pe)) return false;
    const int a = PickAgent(pe);
    if (a < 0) {
      std::vector<Committee> topups(pe.tau);
      for (int t = 0; t < pe.tau; ++t) {
        if (pe.xvec[t] <= 0) continue;
        const std::vector<int> support = LevelSupport(pe.profile, pe.m, t);
        topups[t] = TopSupported(support, pe.kvec[t]);
        if (SupportOf(support, topups[t]) < pe.xvec[t]) return false;
      }
      witness_.committees.assign(pe.tau, {});
      for (int t = 0; t < pe.tau; ++t) {
        Committee& committee = witness_.committees[t];
        committee = accumulated_[t];
        committee.insert(committee.end(), topups[t].begin(), topups[t].end());
        std::sort(committee.begin(), committee.end());
      }
      return true;
    }
    for (int b = 0; b < pe.n; ++b) {
      if (pe.yvec[b] > std::popcount(NominationMask(pe, b))) return false;
    }
    return Children(pe, depth, a, &Search::Gcse);
  }

  bool Qcse(const PeInstance& node, int depth) {
    Enter(depth);
    if (BudgetOverrun(node)) return false;
    if (std::any_of(node.yvec.begin(), node.yvec.end(),
                    [](int y) { return y < 0; })) {
      return false;
    }
    const PeInstance pe = RrPeQcseZeroY(node);
    if (pe.n == 0) {
      if (std::any_of(pe.xvec.begin(), pe.xvec.end(),
                      [](int x) { return x > 0; })) {
        return false;
      }
      witness_.committees.assign(pe.tau, {});
      for (int t = 0; t < pe.tau; ++t) {
        witness_.committees[t] = accumulated_[t];
        std::sort(witness_.committees[t].begin(), witness_.committees[t].end());
      }
      return true;
    }
    const int a = PickAgent(pe);
    if (EligibleFingerprints(pe, a).empty()) return false;
    return Children(pe, depth, a, &Search::Qcse);
  }

  BranchOptions options_;
  std::string solver_;
  std::vector<Committee> accumulated_;
  CommitteeSequence witness_;
  std::int64_t nodes_ = 0;
  std::int64_t fingerprints_ = 0;
  std::int64_t max_depth_ = 0;
  std::int64_t max_children_ = 0;
};

}  // namespace

std::vector<FingerprintMask> EligibleFingerprints(const PeInstance& pe, int a) {
  if (a < 0 || a >= pe.n) throw PreconditionError("agent index out of range");
  if (pe.tau > kMaxBranchTau) {
    throw LimitError("too many levels for fingerprint enumeration");
  }
  const FingerprintMask full = NominationMask(pe, a);
  std::vector<FingerprintMask> masks;
  // Submasks of `full` in ascending order.
  FingerprintMask sub = 0;
  while (true) {
    if (Eligible(pe.mode, std::popcount(sub), pe.yvec[a])) masks.push_back(sub);
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return masks;
}

std::vector<BranchChild> BranchChildren(const PeInstance& pe, int a) {
  CheckBranchable(pe);
  if (a < 0 || a >= pe.n) throw PreconditionError("agent index out of range");
  if (pe.yvec[a] <= 0) throw PreconditionError("branching agent needs y_a > 0");
  const std::vector<FingerprintMask> masks = EligibleFingerprints(pe, a);
  if (masks.empty()) {
    throw PreconditionError("branching agent has no eligible fingerprint");
  }
  std::vector<BranchChild> children;
  children.reserve(masks.size());
  for (FingerprintMask mask : masks) {
    children.push_back(ApplyFingerprint(pe, a, mask));
  }
  return children;
}

SolveResult SolvePeGcseBranch(const PeInstance& pe,
                              const BranchOptions& options) {
  CheckBranchable(pe);
  if (pe.mode != Mode::kEgalitarian) {
    throw PreconditionError("SolvePeGcseBranch requires egalitarian mode");
  }
  return Search(pe, options).Run(pe);
}

SolveResult SolvePeQcseBranch(const PeInstance& pe,
                              const BranchOptions& options) {
  CheckBranchable(pe);
  if (pe.mode != Mode::kEquitable) {
    throw PreconditionError("SolvePeQcseBranch requires equitable mode");
  }
  return Search(pe, options).Run(pe);
}

SolveResult SolveBranch(const Instance& inst, const BranchOptions& options) {
  inst.Validate();
  const PeInstance pe = Lift(inst);
  SolveResult result = inst.mode == Mode::kEgalitarian
                           ? SolvePeGcseBranch(pe, options)
                           : SolvePeQcseBranch(pe, options);
  result.solver = "branch";
  return result;
}

}  // namespace ecse
