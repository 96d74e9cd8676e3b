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

#ifndef ECSE_GENERATORS_HPP_
#define ECSE_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ecse/instance.hpp"

namespace ecse {

// Literals are +v / -v for variable v in 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Throws PreconditionError on an out-of-range literal, or on an empty
  // clause unless allow_empty.
  void Validate(bool allow_empty = false) const;
};

// DIMACS CNF: `c` comment lines, a `p cnf N M` header, 0-terminated clauses.
CnfFormula ParseDimacs(const std::string& text);
std::string SerializeDimacs(const CnfFormula& cnf);

// Vertices are 0-based per side.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;  // (V1 index, V2 index)
};

struct CbvcInput {
  BipartiteGraph graph;
  int k = 0;
};

// `p cbvc <|V1|> <|V2|> <k>` then one `<u> <v>` line per edge, 1-based.
// Lines starting with `c` are comments.
CbvcInput ParseCbvc(const std::string& text);
std::string SerializeCbvc(const CbvcInput& input);

// Whitespace-separated integers.
std::vector<int> ParseMultiset(const std::string& text);

// Two levels; V1 vertex j is candidate j+1, V2 vertex j is candidate
// |V1|+j+1; one agent per edge; x = 0, y = 1. An edgeless graph yields a
// single agent without nominations and y = 0, which is yes like its source.
Instance GenFromCbvc(const BipartiteGraph& graph, int k);

// Three levels. Variable i owns candidates 2i-1 (positive) and 2i
// (negative) and six gadget agents; clause r adds an agent that nominates
// its j-th literal at level j. k = N, x = 0, y = 1.
Instance GenGcse3Sat(const CnfFormula& cnf);
Instance GenQcseX13Sat(const CnfFormula& cnf);

// Committee {c_i or its negation} at all three levels of GenGcse3Sat.
CommitteeSequence ThreeSatWitness(const CnfFormula& cnf,
                                  const std::vector<bool>& assignment);

// Level i per variable, agent j per clause; candidate 1 for a positive and
// 2 for a negative occurrence. k = 1, x = 0, y = 1. Clauses containing a
// variable in both polarities are rejected.
Instance GenGcseSat(const CnfFormula& cnf);

// C_i = {1} if variable i is true, {2} otherwise.
CommitteeSequence SatWitness(const CnfFormula& cnf,
                             const std::vector<bool>& assignment);
// Inverse map; levels whose committee holds neither candidate read false.
std::vector<bool> SatAssignment(const CommitteeSequence& witness);

// Equitable, one candidate. Levels 1..N are the variables; level N+i is a
// complement level for variable i with two agents nominating candidate 1 at
// levels i and N+i. Requires positive literals and distinct variables per
// clause.
Instance GenQcseMonotoneX13Sat(const CnfFormula& cnf);

// One level per variable, one agent per clause. Egalitarian: candidates 1
// (positive), 2 (negative), 3 (variable absent), k = 2, x = M - 2,
// y = N - 2; needs three distinct variables per clause and two occurrences
// of each polarity per variable. Equitable: candidates 1 (present) and 2
// (absent), k = 2, x = M - 3, y = N - 2; needs monotone clauses of three
// distinct variables, three occurrences per variable and at least 7 clauses.
Instance GenNmx(const CnfFormula& cnf, Mode mode);

// OR of 2^q egalitarian inputs with m = 2, k = 1, x = 0, y = 1 and equal
// tau. Adds q selector levels: at level tau+i an agent of input j nominates
// candidate 1 when bit i (most significant first) of j-1 is 0, else 2.
Instance OrCompose(const std::vector<Instance>& inputs);

// s_i agents nominate candidate i at each of |S|/3 levels; x = T, k = 3,
// y = 1, where T = sum / (|S|/3).
Instance Gen3Part(const std::vector<int>& values, Mode mode);

// Each nomination is 0 with probability empty_prob, else uniform on 1..m.
// Identical arguments give identical instances on every platform.
Instance RandomInstance(std::uint64_t seed, int n, int m, int tau, int k, int x,
                        int y, Mode mode, double empty_prob);

// std::mt19937_64 with sampling that does not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi]; requires lo <= hi.
  int Uniform(int lo, int hi);
  // Uniform on [0, 1).
  double Unit();
  bool Bernoulli(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ecse

#endif  // ECSE_GENERATORS_HPP_
