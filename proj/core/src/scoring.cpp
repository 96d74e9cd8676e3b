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

#include "ecse/scoring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

namespace ecse {
namespace {

void CheckSequence(int m, int tau, const CommitteeSequence& seq) {
  if (seq.tau() != tau) {
    throw PreconditionError(
        "solution has " + std::to_string(seq.tau()) +
        " committees, instance has tau=" + std::to_string(tau));
  }
  for (int t = 0; t < tau; ++t) {
    for (int c : seq.committees[t]) {
      if (c < 1 || c > m) {
        throw PreconditionError(
            "level " + std::to_string(t + 1) + " committee names candidate " +
            std::to_string(c) + " outside 1.." + std::to_string(m));
      }
    }
    if (std::adjacent_find(seq.committees[t].begin(), seq.committees[t].end(),
                           std::greater_equal<int>()) !=
        seq.committees[t].end()) {
      throw PreconditionError("level " + std::to_string(t + 1) +
                              " committee is not strictly increasing");
    }
  }
}

bool Contains(const Committee& committee, int c) {
  return std::binary_search(committee.begin(), committee.end(), c);
}

// Shared scoring pass; `size_bound`, `x_bound` and `y_bound` give the
// per-level / per-agent right-hand sides.
template <typename SizeBound, typename XBound, typename YBound>
VerificationReport Check(const Profile& profile, int n, int tau,
                         const CommitteeSequence& seq,
                         const ComparatorSpec& spec, SizeBound size_bound,
                         XBound x_bound, YBound y_bound) {
  VerificationReport report;
  report.level_scores.assign(tau, 0);
  report.agent_scores.assign(n, 0);
  for (int t = 0; t < tau; ++t) {
    for (int a = 0; a < n; ++a) {
      const int c = profile[t][a];
      if (c != kNoCandidate && Contains(seq.committees[t], c)) {
        ++report.level_scores[t];
        ++report.agent_scores[a];
      }
    }
  }
  for (int t = 0; t < tau && !report.first_violation; ++t) {
    const int size = static_cast<int>(seq.committees[t].size());
    if (!Compare(size, spec.cmp_k, size_bound(t))) {
      report.first_violation =
          Violation{Violation::Kind::kLevelSize, t, size, size_bound(t)};
    } else if (!Compare(report.level_scores[t], spec.cmp_x, x_bound(t))) {
      report.first_violation = Violation{Violation::Kind::kLevelScore, t,
                                         report.level_scores[t], x_bound(t)};
    }
  }
  for (int a = 0; a < n && !report.first_violation; ++a) {
    if (!Compare(report.agent_scores[a], spec.cmp_y, y_bound(a))) {
      report.first_violation = Violation{Violation::Kind::kAgentScore, a,
                                         report.agent_scores[a], y_bound(a)};
    }
  }
  report.feasible = !report.first_violation.has_value();
  return report;
}

}  // namespace

int CommitteeScore(const Instance& inst, int t, const Committee& committee) {
  if (t < 0 || t >= inst.tau) {
    throw PreconditionError("level index " + std::to_string(t + 1) +
                            " out of range 1.." + std::to_string(inst.tau));
  }
  int score = 0;
  for (int c : inst.profile[t]) {
    if (c != kNoCandidate &&
        std::find(committee.begin(), committee.end(), c) != committee.end()) {
      ++score;
    }
  }
  return score;
}

int AgentScore(const Instance& inst, int a, const CommitteeSequence& seq) {
  if (a < 0 || a >= inst.n) {
    throw PreconditionError("agent index " + std::to_string(a + 1) +
                            " out of range 1.." + std::to_string(inst.n));
  }
  if (seq.tau() != inst.tau) {
    throw PreconditionError("sequence length differs from tau");
  }
  int score = 0;
  for (int t = 0; t < inst.tau; ++t) {
    const int c = inst.profile[t][a];
    const Committee& committee = seq.committees[t];
    if (c != kNoCandidate &&
        std::find(committee.begin(), committee.end(), c) != committee.end()) {
      ++score;
    }
  }
  return score;
}

bool Compare(int lhs, Comparator cmp, int rhs) {
  switch (cmp) {
    case Comparator::kLe:
      return lhs <= rhs;
    case Comparator::kEq:
      return lhs == rhs;
    case Comparator::kGe:
      return lhs >= rhs;
  }
  return false;
}

const char* ComparatorSymbol(Comparator cmp) {
  switch (cmp) {
    case Comparator::kLe:
      return "<=";
    case Comparator::kEq:
      return "=";
    case Comparator::kGe:
      return ">=";
  }
  return "?";
}

ComparatorSpec ComparatorSpec::ForMode(Mode mode) {
  return ComparatorSpec{
      Comparator::kLe, Comparator::kGe,
      mode == Mode::kEgalitarian ? Comparator::kGe : Comparator::kEq};
}

ComparatorSpec ComparatorSpec::Parse(const std::string& text) {
  std::vector<Comparator> parts;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace),
                token.end());
    if (token == "<=" || token == "le") {
      parts.push_back(Comparator::kLe);
    } else if (token == "=" || token == "==" || token == "eq") {
      parts.push_back(Comparator::kEq);
    } else if (token == ">=" || token == "ge") {
      parts.push_back(Comparator::kGe);
    } else {
      throw PreconditionError("unknown comparator '" + token + "'");
    }
  }
  if (parts.size() != 3) {
    throw PreconditionError("comparator spec needs three entries: '" + text +
                            "'");
  }
  return ComparatorSpec{parts[0], parts[1], parts[2]};
}

std::string ComparatorSpec::ToString() const {
  return std::string(ComparatorSymbol(cmp_k)) + "," + ComparatorSymbol(cmp_x) +
         "," + ComparatorSymbol(cmp_y);
}

const char* ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kLevelSize:
      return "level-size";
    case Violation::Kind::kLevelScore:
      return "level-score";
    case Violation::Kind::kAgentScore:
      return "agent-score";
  }
  return "?";
}

std::string Violation::Describe() const {
  const bool agent = kind == Kind::kAgentScore;
  return std::string(ViolationKindName(kind)) + (agent ? " a=" : " t=") +
         std::to_string(index + 1) + " (value " + std::to_string(value) +
         ", bound " + std::to_string(bound) + ")";
}

VerificationReport Verify(const Instance& inst, const CommitteeSequence& seq) {
  return VerifyGeneralized(inst, ComparatorSpec::ForMode(inst.mode), seq);
}

VerificationReport VerifyGeneralized(const Instance& inst,
                                     const ComparatorSpec& spec,
                                     const CommitteeSequence& seq) {
  CheckSequence(inst.m, inst.tau, seq);
  return Check(
      inst.profile, inst.n, inst.tau, seq, spec, [&](int) { return inst.k; },
      [&](int) { return inst.x; }, [&](int) { return inst.y; });
}

VerificationReport VerifyPe(const PeInstance& pe,
                            const CommitteeSequence& seq) {
  CheckSequence(pe.m, pe.tau, seq);
  return Check(
      pe.profile, pe.n, pe.tau, seq, ComparatorSpec::ForMode(pe.mode),
      [&](int t) { return pe.kvec[t]; }, [&](int t) { return pe.xvec[t]; },
      [&](int a) { return pe.yvec[a]; });
}

}  // namespace ecse
