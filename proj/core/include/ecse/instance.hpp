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

#ifndef ECSE_INSTANCE_HPP_
#define ECSE_INSTANCE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecse {

// Nomination value meaning "no candidate". Candidate ids are 1..m.
inline constexpr int kNoCandidate = 0;

enum class Mode {
  kEgalitarian,  // every agent score >= y
  kEquitable,    // every agent score == y
};

const char* ModeName(Mode mode);  // "gcse" / "qcse"

// A candidate set in canonical form: strictly increasing ids.
using Committee = std::vector<int>;

// profile[t][a] is the candidate agent a nominates at level t, or 0.
using Profile = std::vector<std::vector<int>>;

struct Instance {
  Mode mode = Mode::kEgalitarian;
  int n = 1;
  int m = 0;
  int tau = 1;
  int k = 0;
  int x = 0;
  int y = 0;
  Profile profile;

  // Throws PreconditionError when an invariant is broken.
  void Validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// One committee per level; the witness object.
struct CommitteeSequence {
  std::vector<Committee> committees;

  int tau() const { return static_cast<int>(committees.size()); }
  friend bool operator==(const CommitteeSequence&,
                         const CommitteeSequence&) = default;
};

// Pre-elected generalization: per-level budgets and thresholds, per-agent
// targets. Entries may go negative while branching.
struct PeInstance {
  Mode mode = Mode::kEgalitarian;
  int n = 0;
  int m = 0;
  int tau = 1;
  std::vector<int> kvec;
  std::vector<int> xvec;
  std::vector<int> yvec;
  Profile profile;

  void Validate() const;

  friend bool operator==(const PeInstance&, const PeInstance&) = default;
};

enum class Verdict { kNo, kYes };

struct SolveResult {
  Verdict verdict = Verdict::kNo;
  std::optional<CommitteeSequence> witness;  // present iff kYes
  std::map<std::string, std::int64_t> stats;
  std::string solver;

  bool yes() const { return verdict == Verdict::kYes; }
};

SolveResult YesResult(CommitteeSequence witness, std::string solver);
SolveResult NoResult(std::string solver);

// Error hierarchy. The CLI maps ParseError/PreconditionError to exit code 2
// and LimitError to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration guard, oracle limit, table guard or node budget was hit.
// The question is undecided; never a verdict.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Helpers shared by several modules.

// Number of agents nominating each candidate at level t; index 0 unused.
std::vector<int> LevelSupport(const Profile& profile, int m, int t);

// Up to `budget` candidates with the highest positive support; ties by lower
// id. Returned in canonical (increasing) order.
Committee TopSupported(const std::vector<int>& support, int budget);

// Sum of support over a committee.
int SupportOf(const std::vector<int>& support, const Committee& committee);

// Specialization k_t = k, x_t = x, y_a = y.
PeInstance Lift(const Instance& inst);

}  // namespace ecse

#endif  // ECSE_INSTANCE_HPP_
