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

#ifndef ECSE_IP_HPP_
#define ECSE_IP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecse/committees.hpp"
#include "ecse/instance.hpp"

namespace ecse {

// Levels with equal (renamed) nomination rows form one type.
struct IpType {
  std::vector<int> levels;            // ascending; count() = multiplicity
  std::vector<int> nominations;       // renamed row shared by the levels
  std::vector<Committee> committees;  // valid committees, canonical order

  int count() const { return static_cast<int>(levels.size()); }
};

struct IpVariable {
  int type;
  int committee;  // index into types[type].committees
};

// Integer feasibility model: one variable per (type, valid committee) with
// 0 <= value <= count(type); sum per type = count(type); for every agent the
// sum over the variables whose committee contains its nomination is >= y
// (egalitarian) or == y (equitable).
struct IpModel {
  Mode mode = Mode::kEgalitarian;
  int n = 0;
  int y = 0;
  std::vector<IpType> types;
  std::vector<IpVariable> variables;            // type-major
  std::vector<std::vector<int>> agent_columns;  // X_a as variable indices
  CandidateRenaming renaming;                   // committee ids -> original

  int tau() const;
};

// Renames candidates, groups levels into types by first occurrence and
// enumerates valid committees per type. Throws LimitError from the
// enumeration guard.
IpModel BuildIp(const Instance& inst);

struct IpOptions {
  std::int64_t max_nodes = std::int64_t{1} << 26;
};

// values[v] per variable, or nothing when infeasible. Depth-first over
// types; committees of a type with the same agent set are merged. Throws
// LimitError when the node budget runs out. `nodes` (optional) receives the
// number of search nodes.
std::optional<std::vector<int>> SolveIpNaive(const IpModel& model,
                                             const IpOptions& options = {},
                                             std::int64_t* nodes = nullptr);

// Levels of each type receive committees in variable order, level order.
CommitteeSequence LiftIpWitness(const Instance& inst, const IpModel& model,
                                const std::vector<int>& values);

// CPLEX LP text. Agent rows a<i> are omitted when empty and trivially
// satisfied; type rows are t<i>; variables are x_t<type>_c<committee>, all
// 1-based.
std::string ExportLp(const IpModel& model);

// BuildIp + SolveIpNaive + LiftIpWitness. Stats: committees_enumerated,
// ip_nodes, ip_types, ip_variables.
SolveResult SolveIp(const Instance& inst, const IpOptions& options = {});

}  // namespace ecse

#endif  // ECSE_IP_HPP_
