// Copyright 2026 The understanding-sat Authors
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

#include <gtest/gtest.h>

#include "usat/usat.hpp"

namespace usat {
namespace {

std::vector<bool> bits(const Assignment& a, std::uint32_t n) {
  std::vector<bool> out;
  for (std::uint32_t v = 1; v <= n; ++v) out.push_back(a.value(Variable{v}));
  return out;
}

TEST(BruteForce, FirstModelInCountingOrder) {
  // 000 falsifies the clause, 001 (x3 true) is the first model.
  OracleVerdict v = brute_force(make_instance(3, {{1, 2, 3}}));
  ASSERT_TRUE(v.sat);
  EXPECT_EQ(bits(v.model, 3), (std::vector<bool>{false, false, true}));
  EXPECT_EQ(v.method, OracleMethod::kBrute);
}

TEST(BruteForce, AllSignPatternsIsUnsat) {
  InstanceBuilder b(3);
  for (int mask = 0; mask < 8; ++mask)
    b.add({mask & 1 ? -1 : 1, mask & 2 ? -2 : 2, mask & 4 ? -3 : 3});
  Instance inst = std::move(b).build();
  EXPECT_FALSE(brute_force(inst).sat);
  EXPECT_FALSE(dpll(inst).sat);
}

TEST(BruteForce, EmptyInstanceIsSat) {
  EXPECT_TRUE(brute_force(Instance{}).sat);
  EXPECT_TRUE(dpll(Instance{}).sat);
}

TEST(BruteForce, RefusesTooManyVariables) {
  Instance inst;
  inst.variable_count = kBruteForceMaxVars + 1;
  EXPECT_THROW(brute_force(inst), std::invalid_argument);
}

TEST(Dpll, AgreesWithBruteForceAndModelsVerify) {
  std::size_t sat = 0, unsat = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(seed % 10);
    auto m = static_cast<std::uint32_t>(std::min<std::uint64_t>(
        uniform_clause_capacity(n), 1 + (seed * 7) % (7 * n)));
    Instance inst = gen_random({n, m, seed});
    OracleVerdict b = brute_force(inst), d = dpll(inst);
    ASSERT_EQ(b.sat, d.sat) << "seed " << seed;
    if (b.sat) {
      ++sat;
      EXPECT_TRUE(evaluate(inst, b.model).satisfied);
      EXPECT_TRUE(evaluate(inst, d.model).satisfied);
    } else {
      ++unsat;
    }
  }
  EXPECT_GT(sat, 0u);
  EXPECT_GT(unsat, 0u);
}

TEST(Dpll, AgreesWithBruteForceOnEveryTinyInstance) {
  enumerate_small(3, 3, [](const Instance& inst) {
    ASSERT_EQ(brute_force(inst).sat, dpll(inst).sat) << emit_dimacs(inst);
  });
}

TEST(Oracle, DispatchesOnMethod) {
  Instance inst = make_instance(3, {{1, 2, 3}});
  EXPECT_EQ(run_oracle(inst, OracleMethod::kBrute).method, OracleMethod::kBrute);
  EXPECT_EQ(run_oracle(inst, OracleMethod::kDpll).method, OracleMethod::kDpll);
}

}  // namespace
}  // namespace usat
