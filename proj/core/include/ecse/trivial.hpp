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

#ifndef ECSE_TRIVIAL_HPP_
#define ECSE_TRIVIAL_HPP_

#include <optional>

#include "ecse/instance.hpp"
#include "ecse/scoring.hpp"

namespace ecse {

// Linear-time cases. Returns nothing when none applies. The firing rule is
// recorded in stats as "trivial.<rule>" = 1, where rule is one of
// y_over_tau, y_zero_egalitarian, y_zero_equitable, y_equals_tau,
// k_at_least_m. Rules are tried in that order.
std::optional<SolveResult> TrivialSolve(const Instance& inst);

// The two comparator variants decidable by an extreme committee sequence:
// (<=,<=,<=) by all-empty committees and (>=,>=,>=) by C_t = C. Returns
// nothing for every other spec.
std::optional<SolveResult> SolveGeneralizedExtreme(const Instance& inst,
                                                   const ComparatorSpec& spec);

}  // namespace ecse

#endif  // ECSE_TRIVIAL_HPP_
