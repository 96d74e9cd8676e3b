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

#ifndef ECSE_SCORING_HPP_
#define ECSE_SCORING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ecse/instance.hpp"

namespace ecse {

// Level indices `t` and agent indices `a` are 0-based in the API; reports
// and CLI output print them 1-based.

// |{a : u_t(a) in committee}|. Throws PreconditionError if t is out of range.
int CommitteeScore(const Instance& inst, int t, const Committee& committee);

// Number of levels where a's nomination is elected.
int AgentScore(const Instance& inst, int a, const CommitteeSequence& seq);

enum class Comparator { kLe, kEq, kGe };

bool Compare(int lhs, Comparator cmp, int rhs);
const char* ComparatorSymbol(Comparator cmp);

// Constraint comparators for committee size, level score and agent score.
// (<=, >=, >=) is the egalitarian problem, (<=, >=, ==) the equitable one.
struct ComparatorSpec {
  Comparator cmp_k = Comparator::kLe;
  Comparator cmp_x = Comparator::kGe;
  Comparator cmp_y = Comparator::kGe;

  static ComparatorSpec ForMode(Mode mode);
  // Parses "<=,>=,=" style triples (also accepts "le,ge,eq").
  static ComparatorSpec Parse(const std::string& text);
  std::string ToString() const;

  friend bool operator==(const ComparatorSpec&,
                         const ComparatorSpec&) = default;
};

struct Violation {
  enum class Kind { kLevelSize, kLevelScore, kAgentScore };
  Kind kind;
  int index;  // level or agent, 0-based
  int value;
  int bound;

  // e.g. "agent-score a=2 (score 2, need = 1)"
  std::string Describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* ViolationKindName(Violation::Kind kind);

struct VerificationReport {
  bool feasible = false;
  std::vector<int> level_scores;
  std::vector<int> agent_scores;
  std::optional<Violation> first_violation;
};

// Checks levels in order (size, then score), then agents in order.
// Throws PreconditionError on a dimension mismatch or foreign candidate id.
VerificationReport Verify(const Instance& inst, const CommitteeSequence& seq);

VerificationReport VerifyGeneralized(const Instance& inst,
                                     const ComparatorSpec& spec,
                                     const CommitteeSequence& seq);

// Per-level k_t / x_t and per-agent y_a, comparator by mode.
VerificationReport VerifyPe(const PeInstance& pe, const CommitteeSequence& seq);

}  // namespace ecse

#endif  // ECSE_SCORING_HPP_
