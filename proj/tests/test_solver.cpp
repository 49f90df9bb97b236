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

#include <algorithm>

#include "usat/usat.hpp"

namespace usat {
namespace {

constexpr Literal x(std::uint32_t v) { return Literal::positive(v); }

Instance all_sign_patterns() {
  InstanceBuilder b(3);
  for (int mask = 0; mask < 8; ++mask)
    b.add({mask & 1 ? -1 : 1, mask & 2 ? -2 : 2, mask & 4 ? -3 : 3});
  return std::move(b).build();
}

TEST(Solve, SingleClauseMakesTheFirstLiteralTrue) {
  SolverOutcome out = solve(make_instance(3, {{1, 2, 3}}));
  ASSERT_TRUE(out.is_sat()) << out.detail;
  EXPECT_EQ(out.understanding[x(1)], TruthValue::kTrue);
  EXPECT_EQ(out.understanding[x(2)], TruthValue::kFree);
  EXPECT_EQ(out.understanding[x(3)], TruthValue::kFree);
  EXPECT_EQ(out.assignment.value(Variable{1}), true);
  EXPECT_EQ(out.assignment.value(Variable{2}), false);
  EXPECT_EQ(out.assignment.value(Variable{3}), false);
}

TEST(Solve, EmptyInstanceIsSat) {
  SolverOutcome out = solve(Instance{});
  EXPECT_TRUE(out.is_sat());
  EXPECT_EQ(out.assignment.variable_count(), 0u);
}

TEST(Solve, AllSignPatternsIsUnsat) {
  Instance inst = all_sign_patterns();
  ASSERT_FALSE(brute_force(inst).sat);
  SolverOutcome out = solve(inst);
  EXPECT_TRUE(out.is_unsat()) << to_string(out.kind) << " " << out.detail;
  EXPECT_LT(out.failing_clause, inst.clauses.size());
}

TEST(Solve, SatOutcomesAlwaysVerify) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Instance inst = gen_random({5 + static_cast<std::uint32_t>(seed % 6),
                                static_cast<std::uint32_t>(5 + seed % 30), seed});
    for (bool df : {false, true}) {
      SolveConfig cfg;
      cfg.default_free = df;
      SolverOutcome out = solve(inst, cfg);
      if (!out.is_sat()) continue;
      EXPECT_TRUE(evaluate(inst, out.assignment).satisfied) << seed;
      EXPECT_TRUE(clauses_without_true_literal(inst, out.understanding).empty()) << seed;
      EXPECT_TRUE(out.final_state->unsound_literals().empty()) << seed;
    }
  }
}

TEST(Solve, SameInputSameOutcomeAndTrace) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = gen_random({8, 34, seed});
    SolveConfig cfg;
    cfg.trace = true;
    cfg.order = seed % 2 ? ClauseOrder::kPermutation : ClauseOrder::kInput;
    cfg.order_seed = seed;
    SolverOutcome a = solve(inst, cfg), b = solve(inst, cfg);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.ops, b.ops);
    EXPECT_EQ(a.run->trace.events(), b.run->trace.events());
  }
}

TEST(Solve, NonFalseLiteralsAreAddedFirst) {
  // After {x1, x2, x3}, x1 is true; in {~x1, x4, x5} the first concept
  // must be focused on x4, not on the false ~x1.
  Instance inst = make_instance(5, {{1, 2, 3}, {-1, 4, 5}});
  SolveConfig cfg;
  cfg.trace = true;
  SolverOutcome out = solve(inst, cfg);
  ASSERT_TRUE(out.is_sat());
  std::vector<int> order;
  for (const TraceEvent& e : out.run->trace.events())
    if (e.kind == "CONCEPT" && e.clause == 1u) order.push_back(e.literal->to_dimacs());
  EXPECT_EQ(order, (std::vector<int>{4, 5, -1}));
}

TEST(Solve, OperationCountIsMonotoneAcrossAdmissions) {
  Instance inst = gen_random({10, 40, 5});
  std::vector<std::uint64_t> seen;
  SolveObserver obs;
  obs.on_admitted = [&](const EngineState& s) { seen.push_back(s.op_counter()); };
  SolverOutcome out = solve(inst, {}, obs);
  ASSERT_FALSE(seen.empty());
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_GE(out.ops, seen.back());
}

TEST(Solve, PermutationOrderIsASeededShuffle) {
  Instance inst = gen_random({8, 20, 1});
  SolveConfig cfg;
  cfg.order = ClauseOrder::kPermutation;
  cfg.order_seed = 42;
  auto order = admission_order(inst, cfg);
  EXPECT_EQ(order, admission_order(inst, cfg));
  std::vector<ClauseId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, admission_order(inst, {}));
  EXPECT_NE(order, sorted);
}

TEST(SolveConfig, OrderStringRoundTrips) {
  std::uint64_t seed = 0;
  EXPECT_EQ(SolveConfig::parse_order("input", seed), ClauseOrder::kInput);
  EXPECT_EQ(SolveConfig::parse_order("perm:17", seed), ClauseOrder::kPermutation);
  EXPECT_EQ(seed, 17u);
  EXPECT_THROW(SolveConfig::parse_order("perm:", seed), std::invalid_argument);
  EXPECT_THROW(SolveConfig::parse_order("random", seed), std::invalid_argument);
  SolveConfig cfg;
  cfg.order = ClauseOrder::kPermutation;
  cfg.order_seed = 9;
  EXPECT_EQ(cfg.order_string(), "perm:9");
}

TEST(ExtractAssignment, TrueFalseAndDefault) {
  Instance inst = make_instance(3, {{1, 2, 3}});
  Understanding u(3);
  u.set(x(1), TruthValue::kTrue);
  u.set(x(3), TruthValue::kFalse);
  Assignment a = extract_assignment(u, inst, false);
  EXPECT_TRUE(a.value(Variable{1}));
  EXPECT_FALSE(a.value(Variable{2}));
  EXPECT_FALSE(a.value(Variable{3}));
  EXPECT_TRUE(extract_assignment(u, inst, true).value(Variable{2}));
}

TEST(ExtractAssignment, BaseCaseUnderstandingGivesOneZeroZero) {
  Instance inst = make_instance(3, {{1, 2, 3}});
  SolverOutcome out = solve(inst);
  Assignment a = extract_assignment(out.understanding, inst, false);
  std::vector<bool> bits;
  for (std::uint32_t v = 1; v <= 3; ++v) bits.push_back(a.value(Variable{v}));
  EXPECT_EQ(bits, (std::vector<bool>{true, false, false}));
}

}  // namespace
}  // namespace usat
