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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ecse/io.hpp"
#include "ecse/oracle.hpp"
#include "ecse/scoring.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ecse {
namespace {

using testing::Ex1;

TEST(BuildIp, TwoDayExample) {
  const IpModel model = BuildIp(Ex1(Mode::kEgalitarian, 4));
  ASSERT_EQ(model.types.size(), 2u);
  EXPECT_EQ(model.tau(), 2);
  EXPECT_EQ(model.variables.size(), 2u);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(model.types[i].count(), 1);
    ASSERT_EQ(model.types[i].committees.size(), 1u);
  }
  EXPECT_EQ(model.renaming.ToOriginal(0, model.types[0].committees[0]),
            (Committee{1, 5}));
  EXPECT_EQ(model.renaming.ToOriginal(1, model.types[1].committees[0]),
            (Committee{2, 3}));
}

TEST(BuildIp, IdenticalLevelsShareAType) {
  Instance inst = Ex1(Mode::kEgalitarian, 4);
  inst.profile[1] = inst.profile[0];
  const IpModel model = BuildIp(inst);
  ASSERT_EQ(model.types.size(), 1u);
  EXPECT_EQ(model.types[0].levels, (std::vector<int>{0, 1}));
}

TEST(BuildIp, IncidenceIndexesExistingVariables) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const IpModel model =
        BuildIp(testing::SmallInstance(seed, Mode::kEquitable));
    int total = 0;
    for (const IpType& type : model.types) total += type.count();
    EXPECT_EQ(total, model.tau());
    for (const auto& columns : model.agent_columns) {
      for (int v : columns) {
        EXPECT_GE(v, 0);
        EXPECT_LT(v, static_cast<int>(model.variables.size()));
      }
    }
  }
}

TEST(SolveIpNaive, TwoDayAssignment) {
  const IpModel model = BuildIp(Ex1(Mode::kEgalitarian, 4));
  const auto values = SolveIpNaive(model);
  ASSERT_TRUE(values.has_value());
  EXPECT_EQ(*values, (std::vector<int>{1, 1}));
  EXPECT_EQ(LiftIpWitness(Ex1(Mode::kEgalitarian, 4), model, *values),
            (CommitteeSequence{{{1, 5}, {2, 3}}}));
}

TEST(SolveIpNaive, InfeasibleModels) {
  EXPECT_FALSE(SolveIpNaive(BuildIp(Ex1(Mode::kEgalitarian, 7))).has_value());
  Instance inst = Ex1(Mode::kEgalitarian, 0);
  inst.profile[0][0] = kNoCandidate;
  inst.profile[1][0] = kNoCandidate;
  const IpModel model = BuildIp(inst);
  EXPECT_TRUE(model.agent_columns[0].empty());
  EXPECT_FALSE(SolveIpNaive(model).has_value());
}

TEST(SolveIpNaive, NodeBudgetThrows) {
  IpOptions options;
  options.max_nodes = 1;
  EXPECT_THROW(SolveIpNaive(BuildIp(Ex1(Mode::kEquitable, 3)), options),
               LimitError);
}

TEST(LiftIpWitness, DistributesInLevelOrder) {
  Instance inst;
  inst.n = 2;
  inst.m = 2;
  inst.tau = 2;
  inst.k = 1;
  inst.x = 1;
  inst.y = 1;
  inst.mode = Mode::kEquitable;
  inst.profile = {{1, 2}, {1, 2}};
  const IpModel model = BuildIp(inst);
  ASSERT_EQ(model.types.size(), 1u);
  ASSERT_EQ(model.variables.size(), 2u);
  const CommitteeSequence seq = LiftIpWitness(inst, model, {1, 1});
  EXPECT_EQ(seq, (CommitteeSequence{{{1}, {2}}}));
  EXPECT_TRUE(Verify(inst, seq).feasible);
}

TEST(LiftIpWitness, EmptyCommitteeOnly) {
  Instance inst = Ex1(Mode::kEgalitarian, 0);
  inst.y = 0;
  inst.k = 0;
  const IpModel model = BuildIp(inst);
  const auto values = SolveIpNaive(model);
  ASSERT_TRUE(values.has_value());
  EXPECT_EQ(LiftIpWitness(inst, model, *values), (CommitteeSequence{{{}, {}}}));
}

TEST(ExportLp, TwoDayRows) {
  const std::string lp = ExportLp(BuildIp(Ex1(Mode::kEgalitarian, 4)));
  EXPECT_EQ(lp.rfind("Minimize\n", 0), 0u);
  EXPECT_NE(lp.find("\n a2: x_t1_c1 + x_t2_c1 >= 1\n"), std::string::npos);
  EXPECT_NE(lp.find("\n t1: x_t1_c1 = 1\n"), std::string::npos);
  EXPECT_NE(lp.find("Subject To\n"), std::string::npos);
  EXPECT_NE(lp.find("Bounds\n 0 <= x_t1_c1 <= 1\n"), std::string::npos);
  EXPECT_NE(lp.find("General\n x_t1_c1\n x_t2_c1\nEnd\n"), std::string::npos);
  EXPECT_EQ(lp, ExportLp(BuildIp(Ex1(Mode::kEgalitarian, 4))));

  const std::string eq = ExportLp(BuildIp(Ex1(Mode::kEquitable, 4)));
  EXPECT_NE(eq.find("\n a2: x_t1_c1 + x_t2_c1 = 1\n"), std::string::npos);
}

TEST(ExportLp, EmptyModelHasNoAgentRows) {
  Instance inst;
  inst.n = 1;
  inst.m = 0;
  inst.profile = {{0}};
  const std::string lp = ExportLp(BuildIp(inst));
  EXPECT_EQ(lp.find(" a1:"), std::string::npos);
  EXPECT_NE(lp.find(" t1: x_t1_c1 = 1\n"), std::string::npos);
}

TEST(ExportLp, EmptyAgentRowIsUnsatisfiable) {
  Instance inst = Ex1(Mode::kEgalitarian, 0);
  inst.profile[0][0] = kNoCandidate;
  inst.profile[1][0] = kNoCandidate;
  const std::string lp = ExportLp(BuildIp(inst));
  EXPECT_NE(lp.find(" a1: x_empty >= 1\n"), std::string::npos);
  EXPECT_NE(lp.find(" x_empty = 0\n"), std::string::npos);
}

TEST(SolveIp, AgreesWithOracle) {
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    for (Mode mode : {Mode::kEgalitarian, Mode::kEquitable}) {
      const Instance inst = testing::SmallInstance(seed, mode);
      const IpModel model = BuildIp(inst);
      const auto values = SolveIpNaive(model);
      EXPECT_EQ(values.has_value(), BruteSolve(inst).yes())
          << SerializeInstance(inst);
      if (!values) continue;
      std::vector<int> sums(model.types.size(), 0);
      for (std::size_t v = 0; v < values->size(); ++v) {
        sums[model.variables[v].type] += (*values)[v];
      }
      for (std::size_t t = 0; t < sums.size(); ++t) {
        EXPECT_EQ(sums[t], model.types[t].count());
      }
      EXPECT_TRUE(Verify(inst, LiftIpWitness(inst, model, *values)).feasible);
    }
  }
}

TEST(SolveIp, ReportsModelSize) {
  const SolveResult result = SolveIp(Ex1(Mode::kEgalitarian, 4));
  ASSERT_TRUE(result.yes());
  EXPECT_EQ(result.solver, "ip");
  EXPECT_EQ(result.stats.at("ip_types"), 2);
  EXPECT_EQ(result.stats.at("ip_variables"), 2);
}

}  // namespace
}  // namespace ecse
