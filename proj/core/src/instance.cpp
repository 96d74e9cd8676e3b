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

#include "ecse/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ecse {

const char* ModeName(Mode mode) {
  return mode == Mode::kEgalitarian ? "gcse" : "qcse";
}

namespace {

void ValidateProfile(const Profile& profile, int n, int m, int tau) {
  if (static_cast<int>(profile.size()) != tau) {
    throw PreconditionError("profile has " + std::to_string(profile.size()) +
                            " rows, expected tau=" + std::to_string(tau));
  }
  for (int t = 0; t < tau; ++t) {
    if (static_cast<int>(profile[t].size()) != n) {
      throw PreconditionError("level " + std::to_string(t + 1) + " has " +
                              std::to_string(profile[t].size()) +
                              " entries, expected n=" + std::to_string(n));
    }
    for (int a = 0; a < n; ++a) {
      const int c = profile[t][a];
      if (c < 0 || c > m) {
        throw PreconditionError("nomination " + std::to_string(c) +
                                " at level " + std::to_string(t + 1) +
                                ", agent " + std::to_string(a + 1) +
                                " is outside 0.." + std::to_string(m));
      }
    }
  }
}

}  // namespace

void Instance::Validate() const {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (m < 0) throw PreconditionError("m must be >= 0");
  if (tau < 1) throw PreconditionError("tau must be >= 1");
  if (k < 0 || x < 0 || y < 0) {
    throw PreconditionError("k, x and y must be >= 0");
  }
  ValidateProfile(profile, n, m, tau);
}

void PeInstance::Validate() const {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (m < 0) throw PreconditionError("m must be >= 0");
  if (tau < 1) throw PreconditionError("tau must be >= 1");
  if (static_cast<int>(kvec.size()) != tau ||
      static_cast<int>(xvec.size()) != tau) {
    throw PreconditionError("kvec and xvec must have tau entries");
  }
  if (static_cast<int>(yvec.size()) != n) {
    throw PreconditionError("yvec must have n entries");
  }
  ValidateProfile(profile, n, m, tau);
}

SolveResult YesResult(CommitteeSequence witness, std::string solver) {
  SolveResult result;
  result.verdict = Verdict::kYes;
  result.witness = std::move(witness);
  result.solver = std::move(solver);
  return result;
}

SolveResult NoResult(std::string solver) {
  SolveResult result;
  result.verdict = Verdict::kNo;
  result.solver = std::move(solver);
  return result;
}

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<int> LevelSupport(const Profile& profile, int m, int t) {
  std::vector<int> support(m + 1, 0);
  for (int c : profile[t]) {
    if (c != kNoCandidate) ++support[c];
  }
  return support;
}

Committee TopSupported(const std::vector<int>& support, int budget) {
  std::vector<int> order;
  for (int c = 1; c < static_cast<int>(support.size()); ++c) {
    if (support[c] > 0) order.push_back(c);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return support[a] > support[b]; });
  if (budget < 0) budget = 0;
  if (static_cast<int>(order.size()) > budget) order.resize(budget);
  std::sort(order.begin(), order.end());
  return order;
}

int SupportOf(const std::vector<int>& support, const Committee& committee) {
  int total = 0;
  for (int c : committee) total += support[c];
  return total;
}

PeInstance Lift(const Instance& inst) {
  PeInstance pe;
  pe.mode = inst.mode;
  pe.n = inst.n;
  pe.m = inst.m;
  pe.tau = inst.tau;
  pe.kvec.assign(inst.tau, inst.k);
  pe.xvec.assign(inst.tau, inst.x);
  pe.yvec.assign(inst.n, inst.y);
  pe.profile = inst.profile;
  return pe;
}

}  // namespace ecse
