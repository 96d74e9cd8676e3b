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

#ifndef ECSE_TESTS_SUPPORT_FIXTURES_HPP_
#define ECSE_TESTS_SUPPORT_FIXTURES_HPP_

#include "ecse/instance.hpp"

namespace ecse::testing {

// Six agents choosing among six activities on two days. Candidates are
// numbered alphabetically: D=1, H=2, M=3, R=4, S=5, T=6.
inline constexpr int kD = 1, kH = 2, kM = 3, kR = 4, kS = 5, kT = 6;

inline Instance Ex1(Mode mode, int x) {
  Instance inst;
  inst.mode = mode;
  inst.n = 6;
  inst.m = 6;
  inst.tau = 2;
  inst.k = 2;
  inst.x = x;
  inst.y = 1;
  inst.profile = {{kD, kS, kD, kS, kM, kR}, {kR, kM, kH, kT, kH, kM}};
  return inst;
}

inline const char* kEx1Document =
    "ecse v1\n"
    "mode gcse\n"
    "n 6\n"
    "m 6\n"
    "tau 2\n"
    "k 2\n"
    "x 4\n"
    "y 1\n"
    "levels\n"
    "1 5 1 5 3 4\n"
    "4 3 2 6 2 3\n"
    "end\n";

}  // namespace ecse::testing

#endif  // ECSE_TESTS_SUPPORT_FIXTURES_HPP_
