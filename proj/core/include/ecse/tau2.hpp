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

#ifndef ECSE_TAU2_HPP_
#define ECSE_TAU2_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ecse/instance.hpp"

namespace ecse {

// Two-level equitable data with separate budgets and thresholds.
struct X2Instance {
  int m = 0;
  std::array<std::vector<int>, 2> rows;  // rows[t][i]: nomination of agent i
  std::vector<int> agents;               // original index of agent i
  std::array<int, 2> k = {0, 0};
  std::array<int, 2> x = {0, 0};
  int y = 1;

  int n() const { return static_cast<int>(agents.size()); }
};

// Requires tau == 2.
X2Instance ToX2(const Instance& inst);

struct ForcedCandidate {
  int level;  // 0 or 1
  int candidate;
  friend bool operator==(const ForcedCandidate&,
                         const ForcedCandidate&) = default;
};

struct X2Reduction {
  bool no = false;
  X2Instance instance;
  std::vector<ForcedCandidate> forced;
};

// No verdict when some agent nominates nobody at either level; otherwise the
// input unchanged. Requires y == 1.
std::optional<X2Instance> RrX2NoNomination(const X2Instance& x2);

// One application to the lowest-index agent nominating at exactly one level
// t: its nominee c* is elected at t, k_t drops by one and x_t by the support
// of c* (clamped at 0), every level-t' nominee of a c* supporter is erased
// from row t', and the supporters are deleted. Identity when no agent
// qualifies; `no` when k_t becomes negative.
X2Reduction RrX2ForceSingle(const X2Instance& x2);

// Both rules to a fixed point.
X2Reduction ReduceX2(const X2Instance& x2);

// Bipartite multigraph with one vertex per (level, nominated candidate) and
// one edge per agent.
struct CbivcsInstance {
  std::array<std::vector<int>, 2> candidates;  // vertex -> candidate id
  std::vector<std::array<int, 2>> edges;       // (V1 vertex, V2 vertex)
  std::array<int, 2> k = {0, 0};
  std::array<int, 2> x = {0, 0};
  // Connected components: per vertex, per side sizes N and edge counts M.
  std::array<std::vector<int>, 2> component;
  std::vector<std::array<int, 2>> side_sizes;
  std::vector<int> edge_counts;

  int components() const { return static_cast<int>(edge_counts.size()); }
};

// Requires every agent to nominate at both levels.
CbivcsInstance BuildCbivcs(const X2Instance& x2);

struct CbivcsSolution {
  std::vector<int> side;                     // per component: 0 or 1
  std::array<std::vector<int>, 2> vertices;  // chosen vertices per side
};

// Independent vertex cover X with |X n V_i| <= k_i and degree sum over
// X n V_i >= x_i. Such an X takes exactly one full side of each component,
// so the search runs over components with state (|X n V1|, deg(X n V1)) and
// keeps the smallest |X n V2| per state. `states` (optional) receives the
// number of states generated.
std::optional<CbivcsSolution> SolveCbivcs(const CbivcsInstance& g,
                                          std::int64_t* states = nullptr);

// Equitable, tau == 2. y in {0, 2} use the trivial rules, y > 2 is no, y = 1
// runs the reduction rules and the component search. Stats: forced,
// components, states.
SolveResult SolveQcseTau2(const Instance& inst);

}  // namespace ecse

#endif  // ECSE_TAU2_HPP_
