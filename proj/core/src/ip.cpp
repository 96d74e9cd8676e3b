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

#include "ecse/ip.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ecse {
namespace {

bool ContainsCandidate(const Committee& committee, int c) {
  return c != kNoCandidate &&
         std::binary_search(committee.begin(), committee.end(), c);
}

std::string VariableName(const IpVariable& v) {
  return "x_t" + std::to_string(v.type + 1) + "_c" +
         std::to_string(v.committee + 1);
}

// One representative variable per distinct agent set within a type.
struct Representative {
  int variable;
  std::vector<int> agents;
};

class IpSearch {
 public:
  IpSearch(const IpModel& model, const IpOptions& options)
      : model_(model),
        options_(options),
        scores_(model.n, 0),
        values_(model.variables.size(), 0) {
    const int types = static_cast<int>(model.types.size());
    reps_.resize(types);
    for (int v = 0; v < static_cast<int>(model.variables.size()); ++v) {
      const IpVariable& var = model.variables[v];
      const IpType& type = model.types[var.type];
      std::vector<int> agents;
      for (int a = 0; a < model.n; ++a) {
        if (ContainsCandidate(type.committees[var.committee],
                              type.nominations[a])) {
          agents.push_back(a);
        }
      }
      auto& reps = reps_[var.type];
      if (std::none_of(reps.begin(), reps.end(), [&](const Representative& r) {
            return r.agents == agents;
          })) {
        reps.push_back({v, std::move(agents)});
      }
    }
    // covered_[t][j][a]: some representative j' >= j of type t covers a.
    covered_.resize(types);
    suffix_.assign(types + 1, std::vector<int>(model.n, 0));
    for (int t = types - 1; t >= 0; --t) {
      const int reps = static_cast<int>(reps_[t].size());
      covered_[t].assign(reps + 1, std::vector<bool>(model.n, false));
      for (int j = reps - 1; j >= 0; --j) {
        covered_[t][j] = covered_[t][j + 1];
        for (int a : reps_[t][j].agents) covered_[t][j][a] = true;
      }
      for (int a = 0; a < model.n; ++a) {
        suffix_[t][a] = suffix_[t + 1][a] +
                        (covered_[t][0][a] ? model.types[t].count() : 0);
      }
    }
  }

  std::optional<std::vector<int>> Run() {
    if (model_.types.empty() ? Accept()
                             : Visit(0, 0, model_.types[0].count())) {
      return values_;
    }
    return std::nullopt;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  bool Accept() const {
    for (int s : scores_) {
      if (model_.mode == Mode::kEgalitarian ? s < model_.y : s != model_.y) {
        return false;
      }
    }
    return true;
  }

  bool Hopeless(int t, int j, int cap) const {
    for (int a = 0; a < model_.n; ++a) {
      const int reach =
          scores_[a] + (covered_[t][j][a] ? cap : 0) + suffix_[t + 1][a];
      if (reach < model_.y) return true;
      if (model_.mode == Mode::kEquitable && scores_[a] > model_.y) return true;
    }
    return false;
  }

  void Add(const Representative& rep, int amount) {
    values_[rep.variable] += amount;
    for (int a : rep.agents) scores_[a] += amount;
  }

  bool Overfull(const Representative& rep) const {
    if (model_.mode != Mode::kEquitable) return false;
    return std::any_of(rep.agents.begin(), rep.agents.end(),
                       [&](int a) { return scores_[a] > model_.y; });
  }

  bool Visit(int t, int j, int cap) {
    if (++nodes_ > options_.max_nodes) {
      throw LimitError("ip node budget exceeded (undecided)");
    }
    const auto& reps = reps_[t];
    if (reps.empty() || Hopeless(t, j, cap)) return false;
    const int last = static_cast<int>(reps.size()) - 1;
    if (j == last) {
      Add(reps[j], cap);
      bool found = false;
      if (!Overfull(reps[j])) {
        const int next = t + 1;
        found = next == static_cast<int>(reps_.size())
                    ? Accept()
                    : Visit(next, 0, model_.types[next].count());
      }
      if (!found) Add(reps[j], -cap);
      return found;
    }
    for (int v = 0; v <= cap; ++v) {
      if (v > 0) {
        Add(reps[j], 1);
        if (Overfull(reps[j])) break;
      }
      if (Visit(t, j + 1, cap - v)) return true;
    }
    Add(reps[j], -values_[reps[j].variable]);
    return false;
  }

  const IpModel& model_;
  IpOptions options_;
  std::vector<std::vector<Representative>> reps_;
  std::vector<std::vector<std::vector<bool>>> covered_;
  std::vector<std::vector<int>> suffix_;
  std::vector<int> scores_;
  std::vector<int> values_;
  std::int64_t nodes_ = 0;
};

}  // namespace

int IpModel::tau() const {
  int total = 0;
  for (const IpType& type : types) total += type.count();
  return total;
}

IpModel BuildIp(const Instance& original) {
  original.Validate();
  const RenamedInstance renamed = RenameCandidates(original);
  const Instance& inst = renamed.instance;
  IpModel model;
  model.mode = inst.mode;
  model.n = inst.n;
  model.y = inst.y;
  model.renaming = renamed.renaming;

  std::map<std::vector<int>, int> type_of_row;
  for (int t = 0; t < inst.tau; ++t) {
    auto [it, inserted] = type_of_row.emplace(
        inst.profile[t], static_cast<int>(model.types.size()));
    if (inserted) {
      IpType type;
      type.nominations = inst.profile[t];
      type.committees = EnumerateValidCommittees(inst, t);
      model.types.push_back(std::move(type));
    }
    model.types[it->second].levels.push_back(t);
  }
  model.agent_columns.resize(inst.n);
  for (int i = 0; i < static_cast<int>(model.types.size()); ++i) {
    const IpType& type = model.types[i];
    for (int j = 0; j < static_cast<int>(type.committees.size()); ++j) {
      const int v = static_cast<int>(model.variables.size());
      model.variables.push_back({i, j});
      for (int a = 0; a < inst.n; ++a) {
        if (ContainsCandidate(type.committees[j], type.nominations[a])) {
          model.agent_columns[a].push_back(v);
        }
      }
    }
  }
  return model;
}

std::optional<std::vector<int>> SolveIpNaive(const IpModel& model,
                                             const IpOptions& options,
                                             std::int64_t* nodes) {
  IpSearch search(model, options);
  std::optional<std::vector<int>> values;
  try {
    values = search.Run();
  } catch (const LimitError&) {
    if (nodes) *nodes = search.nodes();
    throw;
  }
  if (nodes) *nodes = search.nodes();
  return values;
}

CommitteeSequence LiftIpWitness(const Instance& inst, const IpModel& model,
                                const std::vector<int>& values) {
  if (values.size() != model.variables.size()) {
    throw PreconditionError("assignment size does not match the model");
  }
  CommitteeSequence seq;
  seq.committees.resize(inst.tau);
  std::vector<int> filled(model.types.size(), 0);
  for (int v = 0; v < static_cast<int>(values.size()); ++v) {
    const IpVariable& var = model.variables[v];
    const IpType& type = model.types[var.type];
    for (int copy = 0; copy < values[v]; ++copy) {
      if (filled[var.type] >= type.count()) {
        throw PreconditionError("assignment exceeds a type multiplicity");
      }
      const int level = type.levels[filled[var.type]++];
      seq.committees[level] =
          model.renaming.ToOriginal(level, type.committees[var.committee]);
    }
  }
  for (int i = 0; i < static_cast<int>(model.types.size()); ++i) {
    if (filled[i] != model.types[i].count()) {
      throw PreconditionError("assignment misses a type multiplicity");
    }
  }
  return seq;
}

std::string ExportLp(const IpModel& model) {
  const char* relation = model.mode == Mode::kEgalitarian ? " >= " : " = ";
  const bool empty_row_holds =
      model.mode == Mode::kEgalitarian ? model.y <= 0 : model.y == 0;
  bool uses_empty = false;
  auto sum = [&](const std::vector<int>& columns) {
    if (columns.empty()) {
      uses_empty = true;
      return std::string("x_empty");
    }
    std::string text;
    for (int v : columns) {
      if (!text.empty()) text += " + ";
      text += VariableName(model.variables[v]);
    }
    return text;
  };

  std::ostringstream rows;
  for (int a = 0; a < model.n; ++a) {
    if (model.agent_columns[a].empty() && empty_row_holds) continue;
    rows << " a" << a + 1 << ": " << sum(model.agent_columns[a]) << relation
         << model.y << "\n";
  }
  std::vector<std::vector<int>> type_columns(model.types.size());
  for (int v = 0; v < static_cast<int>(model.variables.size()); ++v) {
    type_columns[model.variables[v].type].push_back(v);
  }
  for (int i = 0; i < static_cast<int>(model.types.size()); ++i) {
    rows << " t" << i + 1 << ": " << sum(type_columns[i]) << " = "
         << model.types[i].count() << "\n";
  }

  std::ostringstream out;
  out << "Minimize\n obj: 0\nSubject To\n" << rows.str() << "Bounds\n";
  for (const IpVariable& v : model.variables) {
    out << " 0 <= " << VariableName(v) << " <= " << model.types[v.type].count()
        << "\n";
  }
  if (uses_empty) out << " x_empty = 0\n";
  out << "General\n";
  for (const IpVariable& v : model.variables)
    out << " " << VariableName(v) << "\n";
  if (uses_empty) out << " x_empty\n";
  out << "End\n";
  return out.str();
}

SolveResult SolveIp(const Instance& inst, const IpOptions& options) {
  const IpModel model = BuildIp(inst);
  std::int64_t nodes = 0;
  const std::optional<std::vector<int>> values =
      SolveIpNaive(model, options, &nodes);
  SolveResult result =
      values ? YesResult(LiftIpWitness(inst, model, *values), "ip")
             : NoResult("ip");
  result.stats["committees_enumerated"] =
      static_cast<std::int64_t>(model.variables.size());
  result.stats["ip_nodes"] = nodes;
  result.stats["ip_types"] = static_cast<std::int64_t>(model.types.size());
  result.stats["ip_variables"] =
      static_cast<std::int64_t>(model.variables.size());
  return result;
}

}  // namespace ecse
