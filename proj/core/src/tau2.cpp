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

#include "ecse/tau2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "ecse/trivial.hpp"

namespace ecse {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

bool NominatesNobody(const X2Instance& x2, int i) {
  return x2.rows[0][i] == kNoCandidate && x2.rows[1][i] == kNoCandidate;
}

// Search state (|X n V1|, deg(X n V1)).
using State = std::pair<int, int>;

struct Step {
  State previous;
  int side;
};

}  // namespace

X2Instance ToX2(const Instance& inst) {
  inst.Validate();
  if (inst.tau != 2) throw PreconditionError("ToX2 requires tau == 2");
  X2Instance x2;
  x2.m = inst.m;
  x2.rows = {inst.profile[0], inst.profile[1]};
  x2.agents.resize(inst.n);
  std::iota(x2.agents.begin(), x2.agents.end(), 0);
  x2.k = {inst.k, inst.k};
  x2.x = {inst.x, inst.x};
  x2.y = inst.y;
  return x2;
}

std::optional<X2Instance> RrX2NoNomination(const X2Instance& x2) {
  if (x2.y != 1) throw PreconditionError("reduction rules require y == 1");
  for (int i = 0; i < x2.n(); ++i) {
    if (NominatesNobody(x2, i)) return std::nullopt;
  }
  return x2;
}

X2Reduction RrX2ForceSingle(const X2Instance& x2) {
  if (x2.y != 1) throw PreconditionError("reduction rules require y == 1");
  X2Reduction out;
  out.instance = x2;
  int t = -1;
  int star = kNoCandidate;
  for (int i = 0; i < x2.n() && t < 0; ++i) {
    for (int level = 0; level < 2; ++level) {
      if (x2.rows[level][i] != kNoCandidate &&
          x2.rows[1 - level][i] == kNoCandidate) {
        t = level;
        star = x2.rows[level][i];
        break;
      }
    }
  }
  if (t < 0) return out;
  const int other = 1 - t;
  X2Instance& next = out.instance;
  out.forced.push_back({t, star});

  std::vector<bool> conflicting(x2.m + 1, false);
  int supporters = 0;
  for (int i = 0; i < x2.n(); ++i) {
    if (x2.rows[t][i] != star) continue;
    ++supporters;
    if (x2.rows[other][i] != kNoCandidate)
      conflicting[x2.rows[other][i]] = true;
  }
  next.k[t] -= 1;
  next.x[t] = std::max(0, next.x[t] - supporters);
  if (next.k[t] < 0) {
    out.no = true;
    return out;
  }
  X2Instance reduced;
  reduced.m = x2.m;
  reduced.k = next.k;
  reduced.x = next.x;
  reduced.y = x2.y;
  for (int i = 0; i < x2.n(); ++i) {
    if (x2.rows[t][i] == star) continue;
    int row_other = x2.rows[other][i];
    if (row_other != kNoCandidate && conflicting[row_other]) {
      row_other = kNoCandidate;
    }
    reduced.rows[t].push_back(x2.rows[t][i]);
    reduced.rows[other].push_back(row_other);
    reduced.agents.push_back(x2.agents[i]);
  }
  next = std::move(reduced);
  return out;
}

X2Reduction ReduceX2(const X2Instance& x2) {
  X2Reduction out;
  out.instance = x2;
  while (true) {
    if (!RrX2NoNomination(out.instance)) {
      out.no = true;
      return out;
    }
    X2Reduction step = RrX2ForceSingle(out.instance);
    if (step.forced.empty()) return out;
    out.forced.insert(out.forced.end(), step.forced.begin(), step.forced.end());
    out.instance = std::move(step.instance);
    if (step.no) {
      out.no = true;
      return out;
    }
  }
}

CbivcsInstance BuildCbivcs(const X2Instance& x2) {
  CbivcsInstance g;
  g.k = x2.k;
  g.x = x2.x;
  std::array<std::vector<int>, 2> vertex_of;
  for (int side = 0; side < 2; ++side) vertex_of[side].assign(x2.m + 1, -1);
  for (int i = 0; i < x2.n(); ++i) {
    std::array<int, 2> edge{};
    for (int side = 0; side < 2; ++side) {
      const int c = x2.rows[side][i];
      if (c == kNoCandidate) {
        throw PreconditionError("every agent must nominate at both levels");
      }
      if (vertex_of[side][c] < 0) {
        vertex_of[side][c] = static_cast<int>(g.candidates[side].size());
        g.candidates[side].push_back(c);
      }
      edge[side] = vertex_of[side][c];
    }
    g.edges.push_back(edge);
  }

  const int left = static_cast<int>(g.candidates[0].size());
  const int right = static_cast<int>(g.candidates[1].size());
  UnionFind sets(left + right);
  for (const auto& edge : g.edges) sets.Union(edge[0], left + edge[1]);
  std::vector<int> index(left + right, -1);
  auto component_of = [&](int v) {
    const int root = sets.Find(v);
    if (index[root] < 0) {
      index[root] = g.components();
      g.side_sizes.push_back({0, 0});
      g.edge_counts.push_back(0);
    }
    return index[root];
  };
  g.component[0].resize(left);
  g.component[1].resize(right);
  for (int v = 0; v < left; ++v) {
    g.component[0][v] = component_of(v);
    ++g.side_sizes[g.component[0][v]][0];
  }
  for (int v = 0; v < right; ++v) {
    g.component[1][v] = component_of(left + v);
    ++g.side_sizes[g.component[1][v]][1];
  }
  for (const auto& edge : g.edges) ++g.edge_counts[g.component[0][edge[0]]];
  return g;
}

std::optional<CbivcsSolution> SolveCbivcs(const CbivcsInstance& g,
                                          std::int64_t* states) {
  const int total_edges = static_cast<int>(g.edges.size());
  const int components = g.components();
  std::vector<int> remaining(components + 1, 0);
  for (int i = components - 1; i >= 0; --i) {
    remaining[i] = remaining[i + 1] + g.edge_counts[i];
  }
  const int x1_cap = total_edges - g.x[1];

  // frontier: (k1', x1') -> smallest k2' meeting every bound so far.
  std::map<State, int> frontier;
  std::vector<std::map<State, Step>> steps(components);
  std::int64_t generated = 0;
  if (0 <= x1_cap && remaining[0] >= g.x[0]) frontier[{0, 0}] = 0;

  for (int i = 0; i < components && !frontier.empty(); ++i) {
    std::map<State, int> next;
    auto offer = [&](State state, int k2, State previous, int side) {
      if (state.first > g.k[0] || k2 > g.k[1]) return;
      if (state.second > x1_cap) return;
      if (state.second + remaining[i + 1] < g.x[0]) return;
      ++generated;
      auto [it, inserted] = next.emplace(state, k2);
      if (inserted || k2 < it->second) {
        it->second = k2;
        steps[i][state] = {previous, side};
      }
    };
    for (const auto& [state, k2] : frontier) {
      offer({state.first + g.side_sizes[i][0], state.second + g.edge_counts[i]},
            k2, state, 0);
      offer(state, k2 + g.side_sizes[i][1], state, 1);
    }
    frontier = std::move(next);
  }
  if (states) *states = generated;
  if (frontier.empty()) return std::nullopt;

  // Pruning already enforces every bound, so any surviving state accepts.
  State state = frontier.begin()->first;
  CbivcsSolution solution;
  solution.side.assign(components, 0);
  for (int i = components - 1; i >= 0; --i) {
    const Step& step = steps[i].at(state);
    solution.side[i] = step.side;
    state = step.previous;
  }
  for (int side = 0; side < 2; ++side) {
    for (int v = 0; v < static_cast<int>(g.candidates[side].size()); ++v) {
      if (solution.side[g.component[side][v]] == side) {
        solution.vertices[side].push_back(v);
      }
    }
  }
  return solution;
}

SolveResult SolveQcseTau2(const Instance& inst) {
  inst.Validate();
  if (inst.mode != Mode::kEquitable || inst.tau != 2) {
    throw PreconditionError(
        "tau2 solver requires an equitable instance with "
        "two levels");
  }
  if (inst.y != 1) {
    std::optional<SolveResult> trivial = TrivialSolve(inst);
    if (!trivial) throw PreconditionError("no trivial rule applies");
    trivial->solver = "tau2";
    return *trivial;
  }

  const X2Reduction reduction = ReduceX2(ToX2(inst));
  SolveResult result;
  if (reduction.no) {
    result = NoResult("tau2");
  } else {
    const CbivcsInstance g = BuildCbivcs(reduction.instance);
    std::int64_t states = 0;
    const std::optional<CbivcsSolution> solution = SolveCbivcs(g, &states);
    result.stats["components"] = g.components();
    result.stats["states"] = states;
    if (!solution) {
      result = NoResult("tau2");
      result.stats["components"] = g.components();
      result.stats["states"] = states;
    } else {
      CommitteeSequence seq;
      seq.committees.resize(2);
      for (const ForcedCandidate& forced : reduction.forced) {
        seq.committees[forced.level].push_back(forced.candidate);
      }
      for (int side = 0; side < 2; ++side) {
        for (int v : solution->vertices[side]) {
          seq.committees[side].push_back(g.candidates[side][v]);
        }
        std::sort(seq.committees[side].begin(), seq.committees[side].end());
      }
      std::map<std::string, std::int64_t> stats = std::move(result.stats);
      result = YesResult(std::move(seq), "tau2");
      result.stats = std::move(stats);
    }
  }
  result.stats["forced"] = static_cast<std::int64_t>(reduction.forced.size());
  return result;
}

}  // namespace ecse
