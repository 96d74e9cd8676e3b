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

#ifndef ECSE_COMMITTEES_HPP_
#define ECSE_COMMITTEES_HPP_

#include <cstdint>
#include <vector>

#include "ecse/instance.hpp"

namespace ecse {

// Per-level candidate renaming onto 1..m' with m' <= n. Nomination equality
// between agents is preserved level by level, so verdicts are too.
struct CandidateRenaming {
  // new_to_old[t][c'] is the original id of renamed candidate c' at level t
  // (slot 0 unused).
  std::vector<std::vector<int>> new_to_old;

  Committee ToOriginal(int t, const Committee& renamed) const;
  CommitteeSequence ToOriginal(const CommitteeSequence& renamed) const;
};

struct RenamedInstance {
  Instance instance;
  CandidateRenaming renaming;
};

// At each level, the first-nominated candidate (by agent index) becomes 1,
// the next new one 2, and so on. m' is the largest per-level count.
RenamedInstance RenameCandidates(const Instance& inst);

// Guards for committee enumeration.
inline constexpr int kMaxEnumeratedCandidates = 30;
inline constexpr std::int64_t kMaxEnumeratedCommittees = std::int64_t{1} << 22;

// All S within the candidates nominated at level t with |S| <= k and score
// >= x, in lexicographic order. Throws LimitError when more than
// kMaxEnumeratedCandidates candidates are nominated at t or the output
// exceeds kMaxEnumeratedCommittees.
std::vector<Committee> EnumerateValidCommittees(const Instance& inst, int t);

// Bit a of `mask` is set iff agent a's level-t nomination is in `witness`.
struct LevelFingerprint {
  std::uint64_t mask = 0;
  Committee witness;  // lexicographically smallest committee with this mask

  friend bool operator==(const LevelFingerprint&,
                         const LevelFingerprint&) = default;
};

std::uint64_t FingerprintOf(const Instance& inst, int t,
                            const Committee& committee);

// Distinct fingerprints of valid level-t committees, sorted by mask.
// Requires n <= 64.
std::vector<LevelFingerprint> LevelFingerprints(const Instance& inst, int t);

}  // namespace ecse

#endif  // ECSE_COMMITTEES_HPP_
