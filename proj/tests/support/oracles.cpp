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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ecse::testing {
namespace {

int TrueLiterals(const std::vector<int>& clause, std::uint32_t bits) {
  int count = 0;
  for (int literal : clause) {
    const bool value = (bits >> (std::abs(literal) - 1)) & 1;
    count += literal > 0 ? value : !value;
  }
  return count;
}

bool AnyAssignment(const CnfFormula& cnf, std::vector<bool>* model,
                   bool (*accept)(int true_literals)) {
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cnf.num_vars);
       ++bits) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      if (!accept(TrueLiterals(clause, bits))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (model) {
      model->assign(cnf.num_vars, false);
      for (int i = 0; i < cnf.num_vars; ++i) (*model)[i] = (bits >> i) & 1;
    }
    return true;
  }
  return false;
}

bool Triples(std::vector<int>& values, std::vector<bool>& used, int target) {
  const int size = static_cast<int>(values.size());
  int first = 0;
  while (first < size && used[first]) ++first;
  if (first == size) return true;
  used[first] = true;
  for (int j = first + 1; j < size; ++j) {
    if (used[j]) continue;
    used[j] = true;
    for (int l = j + 1; l < size; ++l) {
      if (used[l] || values[first] + values[j] + values[l] != target) continue;
      used[l] = true;
      if (Triples(values, used, target)) return true;
      used[l] = false;
    }
    used[j] = false;
  }
  used[first] = false;
  return false;
}

void Shuffle(Rng& rng, std::vector<int>& items) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    std::swap(items[i], items[rng.Uniform(0, i)]);
  }
}

}  // namespace

bool SatBrute(const CnfFormula& cnf, std::vector<bool>* model) {
  return AnyAssignment(cnf, model, [](int t) { return t >= 1; });
}

bool ExactlyOneBrute(const CnfFormula& cnf, std::vector<bool>* model) {
  return AnyAssignment(cnf, model, [](int t) { return t == 1; });
}

bool CbvcBrute(const BipartiteGraph& graph, int k) {
  for (std::uint32_t left = 0; left < (std::uint32_t{1} << graph.left);
       ++left) {
    if (std::popcount(left) > k) continue;
    for (std::uint32_t right = 0; right < (std::uint32_t{1} << graph.right);
         ++right) {
      if (std::popcount(right) > k) continue;
      const bool covers = std::all_of(
          graph.edges.begin(), graph.edges.end(), [&](const auto& edge) {
            return ((left >> edge.first) & 1) || ((right >> edge.second) & 1);
          });
      if (covers) return true;
    }
  }
  return false;
}

bool ThreePartitionBrute(const std::vector<int>& values) {
  if (values.empty() || values.size() % 3 != 0) return false;
  const int groups = static_cast<int>(values.size()) / 3;
  const int sum = std::accumulate(values.begin(), values.end(), 0);
  if (sum % groups != 0) return false;
  std::vector<int> sorted = values;
  std::vector<bool> used(sorted.size(), false);
  return Triples(sorted, used, sum / groups);
}

CnfFormula RandomCnf(Rng& rng, int vars, int clauses, int min_len, int max_len,
                     bool monotone, bool distinct_vars) {
  CnfFormula cnf;
  cnf.num_vars = vars;
  for (int j = 0; j < clauses; ++j) {
    const int len =
        rng.Uniform(min_len, distinct_vars ? std::min(max_len, vars) : max_len);
    std::vector<int> pool(vars);
    std::iota(pool.begin(), pool.end(), 1);
    Shuffle(rng, pool);
    std::vector<int> clause;
    for (int i = 0; i < len; ++i) {
      const int var = distinct_vars ? pool[i] : rng.Uniform(1, vars);
      const bool negated = !monotone && rng.Bernoulli(0.5);
      clause.push_back(negated ? -var : var);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

CnfFormula RandomNmxFormula(Rng& rng, int vars, Mode mode) {
  std::vector<int> slots;
  for (int v = 1; v <= vars; ++v) {
    if (mode == Mode::kEgalitarian) {
      slots.insert(slots.end(), {v, v, -v, -v});
    } else {
      slots.insert(slots.end(), {v, v, v});
    }
  }
  if (slots.size() % 3 != 0) return {};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Shuffle(rng, slots);
    CnfFormula cnf;
    cnf.num_vars = vars;
    bool ok = true;
    for (std::size_t i = 0; i < slots.size() && ok; i += 3) {
      std::vector<int> clause(slots.begin() + i, slots.begin() + i + 3);
      std::set<int> distinct;
      for (int literal : clause) distinct.insert(std::abs(literal));
      ok = distinct.size() == 3;
      cnf.clauses.push_back(std::move(clause));
    }
    if (ok) return cnf;
  }
  return {};
}

BipartiteGraph RandomBipartite(Rng& rng, int left, int right, double p) {
  BipartiteGraph graph;
  graph.left = left;
  graph.right = right;
  for (int u = 0; u < left; ++u) {
    for (int v = 0; v < right; ++v) {
      if (rng.Bernoulli(p)) graph.edges.emplace_back(u, v);
    }
  }
  return graph;
}

Instance SmallInstance(std::uint64_t seed, Mode mode) {
  Rng rng(seed);
  const int n = rng.Uniform(1, 6);
  const int m = rng.Uniform(1, 5);
  const int tau = rng.Uniform(1, 4);
  const int k = rng.Uniform(0, 3);
  const int x = rng.Uniform(0, n);
  const int y = rng.Uniform(0, tau);
  const double empty_probs[] = {0.0, 0.15, 0.35};
  return RandomInstance(rng.Next(), n, m, tau, k, x, y, mode,
                        empty_probs[rng.Uniform(0, 2)]);
}

PeInstance SmallPeInstance(std::uint64_t seed, Mode mode) {
  Rng rng(seed);
  PeInstance pe;
  pe.mode = mode;
  pe.n = rng.Uniform(1, 5);
  pe.m = rng.Uniform(1, 4);
  pe.tau = rng.Uniform(1, 3);
  for (int t = 0; t < pe.tau; ++t) {
    pe.kvec.push_back(rng.Uniform(0, 2));
    pe.xvec.push_back(rng.Uniform(-1, 3));
  }
  for (int a = 0; a < pe.n; ++a) pe.yvec.push_back(rng.Uniform(0, pe.tau));
  pe.profile.assign(pe.tau, std::vector<int>(pe.n, kNoCandidate));
  for (auto& row : pe.profile) {
    for (int& c : row)
      c = rng.Bernoulli(0.2) ? kNoCandidate : rng.Uniform(1, pe.m);
  }
  return pe;
}

UnprunedDp RunUnprunedDp(const Instance& inst) {
  UnprunedDp result;
  std::set<std::vector<int>> reachable = {std::vector<int>(inst.n, 0)};
  for (int t = 0; t < inst.tau; ++t) {
    std::vector<int> pool;
    for (int c : inst.profile[t]) {
      if (c != kNoCandidate &&
          std::find(pool.begin(), pool.end(), c) == pool.end()) {
        pool.push_back(c);
      }
    }
    std::set<std::vector<int>> next;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pool.size());
         ++mask) {
      if (std::popcount(mask) > inst.k) continue;
      std::vector<int> gain(inst.n, 0);
      int score = 0;
      for (int a = 0; a < inst.n; ++a) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if ((mask >> j & 1) && inst.profile[t][a] == pool[j]) gain[a] = 1;
        }
        score += gain[a];
      }
      if (score < inst.x) continue;
      for (const auto& vec : reachable) {
        std::vector<int> sum = vec;
        for (int a = 0; a < inst.n; ++a) sum[a] += gain[a];
        next.insert(std::move(sum));
      }
    }
    reachable = std::move(next);
    result.level_sizes.push_back(static_cast<std::int64_t>(reachable.size()));
    result.bounded_sizes.push_back(std::count_if(
        reachable.begin(), reachable.end(), [&](const std::vector<int>& v) {
          return std::all_of(v.begin(), v.end(),
                             [&](int s) { return s <= inst.y; });
        }));
  }
  result.verdict = std::any_of(
      reachable.begin(), reachable.end(), [&](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [&](int s) {
          return inst.mode == Mode::kEgalitarian ? s >= inst.y : s == inst.y;
        });
      });
  return result;
}

}  // namespace ecse::testing
