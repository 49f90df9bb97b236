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

// Random mutation scripts over engine states, shared by the unit tests and
// the acceptance runner. Every step checks failure atomicity on the spot.

#ifndef USAT_TESTS_SUPPORT_HPP
#define USAT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "usat/usat.hpp"

namespace usat::testing {

struct ScriptResult {
  std::size_t steps = 0;
  std::size_t contradictions = 0;
  std::vector<std::string> violations;  // empty when every check held
  EngineState state;
};

/// Random instance (3..6 variables, up to 8 clauses) plus a random sequence
/// of concept insertions, pins, exclusions and recomputations. After each
/// step: coupling holds; a contradiction left the state as it was before the
/// step; a successful recomputation left no unsound literal.
inline ScriptResult run_script(std::uint64_t seed, std::size_t steps = 24) {
  Rng rng(splitmix64(seed));
  const auto n = static_cast<std::uint32_t>(3 + uniform_below(rng, 4));
  const auto m = static_cast<std::uint32_t>(1 + uniform_below(rng, 8));
  Instance inst = gen_random({n, m, seed});
  ScriptResult r{0, 0, {}, EngineState(inst)};
  EngineState& s = r.state;

  auto random_literal = [&] {
    return Literal::from_index(static_cast<std::uint32_t>(uniform_below(rng, 2 * n)));
  };
  auto violation = [&](const std::string& what) {
    r.violations.push_back("seed " + std::to_string(seed) + " step " +
                           std::to_string(r.steps) + ": " + what);
  };
  // Constraints are tried on a copy and kept only when the recompute
  // succeeds, the way algorithms G and D use them.
  auto constrain_and_recompute = [&](auto constrain, std::vector<Literal> seeds,
                                     const char* op) {
    EngineState trial = s;
    if (!constrain(trial)) return;
    EngineState before = trial;
    if (auto bad = trial.compute_fixpoint(std::move(seeds))) {
      ++r.contradictions;
      if (!(trial == before)) violation(std::string(op) + ": state changed by a failed recompute");
      return;
    }
    if (!trial.unsound_literals().empty()) violation(std::string(op) + ": unsound literal");
    s = std::move(trial);
  };

  for (; r.steps < steps; ++r.steps) {
    std::uint64_t pick = uniform_below(rng, 10);
    if (pick < 6) {
      const Clause& c = inst.clauses[uniform_below(rng, inst.clauses.size())];
      Literal focus = c.literals[uniform_below(rng, 3)];
      if (s.store().contains(c.id, focus)) continue;
      EngineState before = s;
      if (auto bad = s.add_concept(c, focus)) {
        ++r.contradictions;
        if (!(s == before)) violation("add_concept: state changed on contradiction");
      } else if (!s.unsound_literals().empty()) {
        violation("add_concept: unsound literal after success");
      }
    } else if (pick < 7) {
      Literal l = random_literal();
      constrain_and_recompute([l](EngineState& t) { return t.pin_true(l); }, {l, l.negate()},
                              "pin");
    } else if (pick < 8) {
      Literal l = random_literal();
      constrain_and_recompute([l](EngineState& t) { return t.add_not_true(l); }, {l},
                              "not_true");
    } else {
      constrain_and_recompute([](EngineState&) { return true; },
                              {random_literal(), random_literal()}, "compute");
    }
    if (!s.understanding().coupled()) violation("coupling broken");
    if (!s.well_formed()) violation("store indices or admission inconsistent");
  }
  return r;
}

/// Free literals that have at least one concept for either polarity.
inline std::vector<Literal> free_literals_with_concepts(const EngineState& s) {
  std::vector<Literal> out;
  for (std::uint32_t i = 0; i < s.instance().literal_count(); ++i) {
    Literal l = Literal::from_index(i);
    if (!s.understanding().is_free(l)) continue;
    if (s.store().by_focus(l).empty() && s.store().by_focus(l.negate()).empty()) continue;
    out.push_back(l);
  }
  return out;
}

inline std::vector<Literal> false_literals(const EngineState& s) {
  std::vector<Literal> out;
  for (std::uint32_t i = 0; i < s.instance().literal_count(); ++i)
    if (s.understanding().is_false(Literal::from_index(i))) out.push_back(Literal::from_index(i));
  return out;
}

/// Runs algorithm G and algorithm D on every eligible literal of the state
/// produced by `seed` and checks that the caller's state never changes, and
/// that every D success leaves its literal free and the state coupled.
inline std::vector<std::string> check_algorithm_immunity(std::uint64_t seed) {
  ScriptResult r = run_script(seed);
  std::vector<std::string> out = r.violations;
  const EngineState& s = r.state;
  const EngineState snapshot = s;
  for (Literal l : free_literals_with_concepts(s)) {
    algorithm_g(s, l);
    if (!(s == snapshot)) out.push_back("seed " + std::to_string(seed) + ": G mutated its input");
  }
  for (Literal l : false_literals(s)) {
    auto freed = algorithm_d(s, l);
    if (!(s == snapshot)) out.push_back("seed " + std::to_string(seed) + ": D mutated its input");
    if (freed) {
      bool ok = freed->understanding().is_free(l) && freed->understanding().coupled() &&
                (freed->overlay().is_pinned(l) ||
                 freed->reevaluate_literal(l) == TruthValue::kFree);
      if (!ok)
        out.push_back("seed " + std::to_string(seed) + ": D returned a state where " +
                      l.to_string() + " is not free");
    }
  }
  return out;
}

}  // namespace usat::testing

#endif  // USAT_TESTS_SUPPORT_HPP
