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

#ifndef ECSE_ORACLE_HPP_
#define ECSE_ORACLE_HPP_

#include <cstdint>

#include "ecse/instance.hpp"
#include "ecse/scoring.hpp"

namespace ecse {

// Brute-force ground truth. Slow on purpose and independent of every other
// solver in the library: it shares only the data types.
struct OracleLimits {
  int max_n = 8;
  int max_m = 8;  // per-level count of distinct nominated candidates
  int max_tau = 6;
  std::int64_t max_committees_per_level = 4096;
};

// Exhaustive search over the valid committees of every level, drawn from the
// candidates nominated there. Witness is the first accepting sequence in
// lexicographic order.
SolveResult BruteSolve(const Instance& inst, const OracleLimits& limits = {});

SolveResult BruteSolvePe(const PeInstance& pe, const OracleLimits& limits = {});

// Searches all subsets of {1..m} per level, so here max_m bounds m itself.
SolveResult BruteSolveGeneralized(const Instance& inst,
                                  const ComparatorSpec& spec,
                                  const OracleLimits& limits = {});

}  // namespace ecse

#endif  // ECSE_ORACLE_HPP_
