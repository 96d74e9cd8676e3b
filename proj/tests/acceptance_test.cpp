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

// Runs the eight acceptance criteria and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ecse/branch.hpp"
#include "ecse/committees.hpp"
#include "ecse/dp.hpp"
#include "ecse/generators.hpp"
#include "ecse/io.hpp"
#include "ecse/ip.hpp"
#include "ecse/oracle.hpp"
#include "ecse/reduce.hpp"
#include "ecse/scoring.hpp"
#include "ecse/tau2.hpp"
#include "ecse/trivial.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ecse {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts checks and keeps the first failure message.
class Checker {
 public:
  void Expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what();
  }
  void Note(const std::string& text) {
    notes_ += (notes_.empty() ? "" : ", ") + text;
  }

  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.empty()) out << ", " << notes_;
    if (failures_ > 0) {
      out << ", " << failures_ << " failed; first: " << first_;
    }
    return out.str();
  }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::string Show(const Instance& inst) {
  std::string text = SerializeInstance(inst);
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

OracleLimits Wide() {
  OracleLimits limits;
  limits.max_n = 64;
  limits.max_m = 16;
  limits.max_tau = 10;
  limits.max_committees_per_level = 1 << 16;
  return limits;
}

// Every committee sequence with committees of size <= k, by direct
// enumeration over all candidate subsets, filtered by Verify.
std::vector<CommitteeSequence> FeasibleByExhaustion(const Instance& inst) {
  std::vector<Committee> committees;
  for (std::uint32_t mask = 0; mask < (1u << inst.m); ++mask) {
    if (__builtin_popcount(mask) > inst.k) continue;
    Committee c;
    for (int i = 0; i < inst.m; ++i) {
      if (mask >> i & 1) c.push_back(i + 1);
    }
    committees.push_back(c);
  }
  std::vector<CommitteeSequence> out;
  std::vector<std::size_t> index(inst.tau, 0);
  while (true) {
    CommitteeSequence seq;
    for (std::size_t i : index) seq.committees.push_back(committees[i]);
    if (Verify(inst, seq).feasible) out.push_back(seq);
    int t = 0;
    while (t < inst.tau && ++index[t] == committees.size()) index[t++] = 0;
    if (t == inst.tau) break;
  }
  return out;
}

// Criterion 1.
void Example(Checker& check) {
  const CommitteeSequence unique{
      {{testing::kD, testing::kS}, {testing::kH, testing::kM}}};
  struct Variant {
    Mode mode;
    int x;
    bool yes;
  };
  for (const Variant v : {Variant{Mode::kEgalitarian, 4, true},
                          Variant{Mode::kEquitable, 3, true},
                          Variant{Mode::kEquitable, 4, false}}) {
    const Instance inst = testing::Ex1(v.mode, v.x);
    const auto feasible = FeasibleByExhaustion(inst);
    const std::string name =
        std::string(ModeName(v.mode)) + " x=" + std::to_string(v.x);
    check.Expect(feasible.empty() != v.yes,
                 [&] { return name + ": exhaustion disagrees"; });
    if (v.mode == Mode::kEgalitarian) {
      check.Expect(feasible.size() == 1 && feasible[0] == unique,
                   [&] { return name + ": witness is not unique"; });
    }
    std::vector<std::pair<std::string, SolveResult>> runs = {
        {"brute", BruteSolve(inst)},
        {"branch", SolveBranch(inst)},
        {"dp", SolveDp(inst)},
        {"ip", SolveIp(inst)},
    };
    if (v.mode == Mode::kEquitable)
      runs.emplace_back("tau2", SolveQcseTau2(inst));
    for (const auto& [solver, result] : runs) {
      check.Expect(result.yes() == v.yes,
                   [&] { return name + ": " + solver + " verdict"; });
      if (!result.yes()) continue;
      check.Expect(Verify(inst, *result.witness).feasible,
                   [&] { return name + ": " + solver + " witness"; });
      if (v.mode == Mode::kEgalitarian) {
        check.Expect(*result.witness == unique,
                     [&] { return name + ": " + solver + " witness differs"; });
      }
    }
  }
}

// Criterion 2.
void OracleEquivalence(Checker& check) {
  int instances = 0, yes = 0, tau2 = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    for (Mode mode : {Mode::kEgalitarian, Mode::kEquitable}) {
      const Instance inst = testing::SmallInstance(seed, mode);
      ++instances;
      const SolveResult oracle = BruteSolve(inst);
      yes += oracle.yes();
      std::vector<std::pair<std::string, SolveResult>> runs = {
          {"brute", oracle},
          {"branch", SolveBranch(inst)},
          {"dp", SolveDp(inst)},
          {"ip", SolveIp(inst)},
      };
      if (mode == Mode::kEquitable && inst.tau == 2) {
        ++tau2;
        runs.emplace_back("tau2", SolveQcseTau2(inst));
      }
      for (const auto& [solver, result] : runs) {
        check.Expect(result.verdict == oracle.verdict,
                     [&] { return solver + " verdict on " + Show(inst); });
        if (result.yes()) {
          check.Expect(Verify(inst, *result.witness).feasible,
                       [&] { return solver + " witness on " + Show(inst); });
        }
      }
    }
  }
  check.Note(std::to_string(instances) + " instances, " + std::to_string(yes) +
             " yes, " + std::to_string(tau2) + " with tau2");
}

// Criterion 3.
void ReductionSoundness(Checker& check) {
  const OracleLimits wide = Wide();
  std::vector<std::string> counts;
  auto run = [&](const std::string& name, auto&& sample) {
    int yes = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Rng rng(seed);
      const auto [source, generated] = sample(rng);
      const bool got = BruteSolve(generated, wide).yes();
      check.Expect(got == source,
                   [&] { return name + " on " + Show(generated); });
      yes += source;
    }
    counts.push_back(name + " " + std::to_string(yes) + "/200 yes");
  };

  run("cbvc", [](Rng& rng) {
    const int left = rng.Uniform(1, 4), right = rng.Uniform(1, 4);
    const BipartiteGraph graph =
        testing::RandomBipartite(rng, left, right, rng.Unit());
    const int k = rng.Uniform(0, 3);
    return std::pair{testing::CbvcBrute(graph, k), GenFromCbvc(graph, k)};
  });
  run("sat", [](Rng& rng) {
    const CnfFormula cnf = testing::RandomCnf(
        rng, rng.Uniform(1, 4), rng.Uniform(1, 6), 1, 3, false, true);
    return std::pair{testing::SatBrute(cnf), GenGcseSat(cnf)};
  });
  run("3sat", [](Rng& rng) {
    const CnfFormula cnf = testing::RandomCnf(
        rng, rng.Uniform(1, 3), rng.Uniform(1, 5), 1, 3, false, false);
    return std::pair{testing::SatBrute(cnf), GenGcse3Sat(cnf)};
  });
  run("x13sat", [](Rng& rng) {
    const CnfFormula cnf = testing::RandomCnf(
        rng, rng.Uniform(1, 3), rng.Uniform(1, 4), 1, 3, false, false);
    return std::pair{testing::ExactlyOneBrute(cnf), GenQcseX13Sat(cnf)};
  });
  run("monotone-x13sat", [](Rng& rng) {
    const CnfFormula cnf = testing::RandomCnf(
        rng, rng.Uniform(1, 4), rng.Uniform(1, 4), 1, 3, true, true);
    return std::pair{testing::ExactlyOneBrute(cnf), GenQcseMonotoneX13Sat(cnf)};
  });
  run("nmx-gcse", [](Rng& rng) {
    CnfFormula cnf;
    while (cnf.clauses.empty()) {
      cnf = testing::RandomNmxFormula(rng, rng.Bernoulli(0.5) ? 3 : 6,
                                      Mode::kEgalitarian);
    }
    return std::pair{testing::SatBrute(cnf), GenNmx(cnf, Mode::kEgalitarian)};
  });
  run("nmx-qcse", [](Rng& rng) {
    CnfFormula cnf;
    while (cnf.clauses.empty()) {
      cnf = testing::RandomNmxFormula(rng, rng.Uniform(7, 9), Mode::kEquitable);
    }
    return std::pair{testing::ExactlyOneBrute(cnf),
                     GenNmx(cnf, Mode::kEquitable)};
  });
  run("or", [](Rng& rng) {
    const int q = rng.Uniform(1, 2);
    const int tau = rng.Uniform(1, 2);
    std::vector<Instance> inputs;
    bool any = false;
    for (int j = 0; j < (1 << q); ++j) {
      inputs.push_back(RandomInstance(rng.Next(), rng.Uniform(1, 3), 2, tau, 1,
                                      0, 1, Mode::kEgalitarian, 0.2));
      any = BruteSolve(inputs.back()).yes() || any;
    }
    return std::pair{any, OrCompose(inputs)};
  });
  for (Mode mode : {Mode::kEgalitarian, Mode::kEquitable}) {
    run(std::string("3part-") + ModeName(mode), [mode](Rng& rng) {
      std::vector<int> values(6);
      int sum = 0;
      for (int& v : values) sum += v = rng.Uniform(1, 4);
      if (sum % 2) values[0] += 1;
      return std::pair{testing::ThreePartitionBrute(values),
                       Gen3Part(values, mode)};
    });
  }
  std::string joined;
  for (const auto& c : counts) joined += (joined.empty() ? "" : "; ") + c;
  check.Note(joined);
}

// Criterion 4.
Instance KernelInstance(std::uint64_t seed) {
  Rng rng(seed);
  const int n = rng.Uniform(1, 5);
  const int tau = rng.Uniform(1, 50);
  const int m = rng.Uniform(1, 5);
  const int y = rng.Uniform(0, std::min(tau, 3));
  Instance inst = RandomInstance(
      seed, n, m, tau, rng.Uniform(1, 3), rng.Uniform(0, (n + 1) / 2), y,
      Mode::kEgalitarian, rng.Bernoulli(0.5) ? 0.25 : 0.0);
  // One sparse agent, so that some agents stay critical.
  const int sparse = rng.Uniform(0, n - 1);
  for (int t = 0; t < tau; ++t) {
    if (!rng.Bernoulli(static_cast<double>(n * y + 1) / tau)) {
      inst.profile[t][sparse] = kNoCandidate;
    }
  }
  return inst;
}

void KernelBounds(Checker& check) {
  int reduced = 0, resolved = 0, branched = 0, max_tau = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = KernelInstance(seed);
    max_tau = std::max(max_tau, inst.tau);
    const KernelResult result = KernelizeNy(inst);
    const SolveResult direct = SolveDp(inst);
    if (result.resolved) {
      ++resolved;
      check.Expect(result.verdict == direct.verdict,
                   [&] { return "resolved verdict on " + Show(inst); });
      if (result.verdict == Verdict::kYes) {
        check.Expect(Verify(inst, *result.witness).feasible,
                     [&] { return "resolved witness on " + Show(inst); });
      }
      continue;
    }
    ++reduced;
    const Instance& kernel = result.reduced;
    check.Expect(kernel.tau <= inst.n * inst.n * inst.y,
                 [&] { return "tau' bound on " + Show(inst); });
    check.Expect(kernel.m <= inst.n,
                 [&] { return "m' bound on " + Show(inst); });
    const SolveResult by_dp = SolveDp(kernel);
    check.Expect(by_dp.verdict == direct.verdict,
                 [&] { return "kernel dp verdict on " + Show(inst); });
    if (by_dp.yes()) {
      check.Expect(Verify(inst, LiftKernelWitness(inst, result, *by_dp.witness))
                       .feasible,
                   [&] { return "lifted witness on " + Show(inst); });
    }
    if (kernel.k * kernel.tau <= 24) {
      ++branched;
      check.Expect(SolveBranch(kernel).verdict == direct.verdict,
                   [&] { return "kernel branch verdict on " + Show(inst); });
    }
  }
  check.Note(std::to_string(reduced) + " reduced, " + std::to_string(resolved) +
             " resolved, " + std::to_string(branched) +
             " also branched, max tau " + std::to_string(max_tau));
}

// Criterion 5.

// Equitable two-level instance with a planted solution: committees
// {1..k} at both levels, each agent elected at exactly one of them.
Instance PlantedTau2(std::uint64_t seed, int n, int m, int k) {
  Rng rng(seed);
  Instance inst;
  inst.mode = Mode::kEquitable;
  inst.n = n;
  inst.m = m;
  inst.tau = 2;
  inst.k = k;
  inst.y = 1;
  inst.profile.assign(2, std::vector<int>(n, kNoCandidate));
  std::vector<int> support(2, 0);
  for (int a = 0; a < n; ++a) {
    const int hit = rng.Uniform(0, 1);
    inst.profile[hit][a] = rng.Uniform(1, k);
    ++support[hit];
    if (!rng.Bernoulli(0.2)) inst.profile[1 - hit][a] = rng.Uniform(k + 1, m);
  }
  inst.x = std::min(support[0], support[1]) - rng.Uniform(0, 10);
  inst.x = std::max(inst.x, 0);
  return inst;
}

// Components recomputed from the edge list alone.
std::vector<int> ComponentsFromEdges(const CbivcsInstance& g) {
  const int left = static_cast<int>(g.candidates[0].size());
  const int total = left + static_cast<int>(g.candidates[1].size());
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges) parent[find(e[0])] = find(left + e[1]);
  std::vector<int> root(total);
  for (int v = 0; v < total; ++v) root[v] = find(v);
  return root;
}

bool FullSides(const CbivcsInstance& g, const CbivcsSolution& solution) {
  const int left = static_cast<int>(g.candidates[0].size());
  const int total = left + static_cast<int>(g.candidates[1].size());
  std::vector<char> chosen(total, 0);
  for (int v : solution.vertices[0]) chosen[v] = 1;
  for (int v : solution.vertices[1]) chosen[left + v] = 1;
  const std::vector<int> root = ComponentsFromEdges(g);
  // Per component: chosen counts and sizes per side.
  std::vector<std::array<int, 4>> tally(total, {0, 0, 0, 0});
  for (int v = 0; v < total; ++v) {
    const int side = v < left ? 0 : 1;
    ++tally[root[v]][side];
    tally[root[v]][2 + side] += chosen[v];
  }
  for (int r = 0; r < total; ++r) {
    const auto& [n1, n2, c1, c2] = tally[r];
    if (n1 + n2 == 0) continue;
    const bool first = c1 == n1 && c2 == 0;
    const bool second = c2 == n2 && c1 == 0;
    if (!first && !second) return false;
  }
  return true;
}

void Tau2Scaling(Checker& check, double* slowest) {
  int yes = 0, sets = 0;
  const int n = 10000;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = seed % 2 ? PlantedTau2(seed, n, 4000, 1500)
                                   : RandomInstance(seed, n, 30, 2, 20, n / 3,
                                                    1, Mode::kEquitable, 0.3);
    const auto start = Clock::now();
    const SolveResult result = SolveQcseTau2(inst);
    const double seconds = SecondsSince(start);
    *slowest = std::max(*slowest, seconds);
    check.Expect(seconds < 5.0, [&] {
      return "seed " + std::to_string(seed) + " took " +
             std::to_string(seconds) + " s";
    });
    if (seed % 2) {
      check.Expect(result.yes(), [&] {
        return "planted seed " + std::to_string(seed) + " is no";
      });
    }
    if (result.yes()) {
      ++yes;
      check.Expect(Verify(inst, *result.witness).feasible,
                   [&] { return "witness for seed " + std::to_string(seed); });
    }
    const X2Reduction reduction = ReduceX2(ToX2(inst));
    if (reduction.no) continue;
    const CbivcsInstance g = BuildCbivcs(reduction.instance);
    const auto solution = SolveCbivcs(g);
    if (!solution) continue;
    ++sets;
    check.Expect(FullSides(g, *solution), [&] {
      return "full-side invariant for seed " + std::to_string(seed);
    });
  }
  check.Note(std::to_string(yes) + "/10 yes, " + std::to_string(sets) +
             " cover sets checked");
}

// Criterion 6.
void BranchingBounds(Checker& check) {
  std::int64_t deepest = 0, widest = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    for (Mode mode : {Mode::kEgalitarian, Mode::kEquitable}) {
      const Instance inst = testing::SmallInstance(seed, mode);
      const SolveResult result = SolveBranch(inst);
      const std::int64_t depth = result.stats.at("max_depth");
      const std::int64_t children = result.stats.at("max_children");
      deepest = std::max(deepest, depth);
      widest = std::max(widest, children);
      check.Expect(depth <= std::min(inst.n, inst.k * inst.tau),
                   [&] { return "depth on " + Show(inst); });
      check.Expect(children <= std::int64_t{1} << inst.tau,
                   [&] { return "children on " + Show(inst); });
    }
  }
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 600 && checked < 300; ++seed) {
    const Mode mode = seed % 2 ? Mode::kEgalitarian : Mode::kEquitable;
    const PeInstance pe = testing::SmallPeInstance(seed, mode);
    int a = -1;
    for (int b = 0; b < pe.n && a < 0; ++b) {
      if (pe.yvec[b] > 0 && !EligibleFingerprints(pe, b).empty()) a = b;
    }
    if (a < 0) continue;
    ++checked;
    const auto children = BranchChildren(pe, a);
    check.Expect(children.size() <= std::size_t{1} << pe.tau,
                 [&] { return "child count on " + SerializePeInstance(pe); });
    bool any = false;
    for (const BranchChild& child : children) {
      any = BruteSolvePe(child.instance).yes() || any;
    }
    check.Expect(BruteSolvePe(pe).yes() == any, [&] {
      return "OR-equivalence on " + SerializePeInstance(pe);
    });
  }
  check.Expect(checked == 300, [&] {
    return "only " + std::to_string(checked) + " PE instances branched";
  });
  check.Note("max depth " + std::to_string(deepest) + ", max children " +
             std::to_string(widest) + ", " + std::to_string(checked) +
             " PE instances");
}

// Criterion 7.
void DpBound(Checker& check) {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    for (Mode mode : {Mode::kEgalitarian, Mode::kEquitable}) {
      const Instance inst = testing::SmallInstance(seed, mode);
      std::int64_t bound = 1;
      for (int a = 0; a < inst.n; ++a) bound *= inst.y + 1;
      const SolveResult pruned = SolveDp(inst);
      check.Expect(pruned.stats.at("max_level_entries") <= bound,
                   [&] { return "level size on " + Show(inst); });
      if (mode != Mode::kEquitable || inst.n > 4) continue;
      ++compared;
      const testing::UnprunedDp unpruned = testing::RunUnprunedDp(inst);
      check.Expect(pruned.yes() == unpruned.verdict,
                   [&] { return "pruned vs unpruned on " + Show(inst); });
      for (std::int64_t size : unpruned.bounded_sizes) {
        check.Expect(size <= bound,
                     [&] { return "unpruned size on " + Show(inst); });
      }
    }
  }
  check.Note(std::to_string(compared) + " equitable instances with n <= 4");
}

// Criterion 8. Every profile with n, m, tau <= 3, up to renaming the
// candidates within a level (which preserves every comparator).
void ForEachRow(int n, int m, const std::function<void(std::vector<int>&)>& f) {
  std::vector<int> row(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      f(row);
      return;
    }
    for (int c = 0; c <= std::min(m, used + 1); ++c) {
      row[i] = c;
      rec(i + 1, std::max(used, c));
    }
  };
  rec(0, 0);
}

void GeneralizedComparators(Checker& check) {
  ComparatorSpec all_le{Comparator::kLe, Comparator::kLe, Comparator::kLe};
  ComparatorSpec all_ge{Comparator::kGe, Comparator::kGe, Comparator::kGe};
  std::int64_t profiles = 0, cases = 0, ge_yes = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      std::vector<std::vector<int>> rows;
      ForEachRow(n, m, [&](std::vector<int>& row) { rows.push_back(row); });
      for (int tau = 1; tau <= 3; ++tau) {
        std::vector<std::size_t> pick(tau, 0);
        while (true) {
          ++profiles;
          Instance inst;
          inst.n = n;
          inst.m = m;
          inst.tau = tau;
          for (std::size_t i : pick) inst.profile.push_back(rows[i]);
          auto compare = [&](const ComparatorSpec& spec) {
            ++cases;
            const auto fast = SolveGeneralizedExtreme(inst, spec);
            const SolveResult brute = BruteSolveGeneralized(inst, spec);
            check.Expect(fast.has_value() && fast->verdict == brute.verdict,
                         [&] { return spec.ToString() + " on " + Show(inst); });
            if (fast && fast->yes()) {
              check.Expect(
                  VerifyGeneralized(inst, spec, *fast->witness).feasible,
                  [&] { return spec.ToString() + " witness " + Show(inst); });
            }
            return brute.yes();
          };
          for (int k = 0; k <= m; ++k) {
            inst.k = k;
            inst.x = 0;
            inst.y = 0;
            compare(all_le);
            for (int x = 0; x <= n; ++x) {
              for (int y = 0; y <= tau; ++y) {
                inst.x = x;
                inst.y = y;
                ge_yes += compare(all_ge);
              }
            }
          }
          int t = 0;
          while (t < tau && ++pick[t] == rows.size()) pick[t++] = 0;
          if (t == tau) break;
        }
      }
    }
  }
  check.Note(std::to_string(profiles) + " profiles, " + std::to_string(cases) +
             " cases, " + std::to_string(ge_yes) + " (>=,>=,>=) yes");
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 when the criterion has no time bound
  std::function<void(Checker&)> run;
};

}  // namespace
}  // namespace ecse

int main() {
  using namespace ecse;
  double slowest_tau2 = 0;
  const std::vector<Criterion> criteria = {
      {"example reproduction", 1.0, Example},
      {"oracle equivalence", 300.0, OracleEquivalence},
      {"reduction soundness", 300.0, ReductionSoundness},
      {"kernel bounds", 0.0, KernelBounds},
      {"tau=2 scaling", 0.0,
       [&](Checker& check) { Tau2Scaling(check, &slowest_tau2); }},
      {"branching bounds", 0.0, BranchingBounds},
      {"dp table bound", 0.0, DpBound},
      {"generalized comparators", 0.0, GeneralizedComparators},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    Checker check;
    const auto start = Clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false,
                   [&] { return std::string("exception: ") + e.what(); });
    }
    const double seconds = SecondsSince(start);
    if (c.limit_seconds > 0) {
      check.Expect(seconds < c.limit_seconds, [&] {
        return "exceeded " + std::to_string(c.limit_seconds) + " s";
      });
    }
    if (i == 4) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "slowest solve %.3f s", slowest_tau2);
      check.Note(buf);
    }
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n",
                check.ok() ? "PASS" : "FAIL", i + 1, c.name,
                check.Summary().c_str(), seconds);
    std::fflush(stdout);
    failed += !check.ok();
  }
  return failed == 0 ? 0 : 1;
}
