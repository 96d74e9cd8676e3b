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

#ifndef ECSE_DP_HPP_
#define ECSE_DP_HPP_

#include <cstdint>

#include "ecse/instance.hpp"

namespace ecse {

inline constexpr int kMaxDpAgents = 20;

struct DpOptions {
  // Total reachable score vectors over all levels; LimitError beyond this.
  std::int64_t max_entries = std::int64_t{1} << 24;
};

// Level-by-level sweep over reachable per-agent score vectors, one transition
// per distinct level fingerprint. Egalitarian scores are capped at y;
// equitable vectors with an entry above y are dropped. Stats: table_entries,
// max_level_entries, transitions. Throws LimitError when n > kMaxDpAgents,
// the packed key space exceeds 63 bits, or the table guard trips.
SolveResult SolveDp(const Instance& inst, const DpOptions& options = {});

}  // namespace ecse

#endif  // ECSE_DP_HPP_
