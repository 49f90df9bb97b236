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

#ifndef USAT_SOLVER_HPP
#define USAT_SOLVER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "usat/algorithms.hpp"
#include "usat/cnf.hpp"
#include "usat/engine.hpp"
#include "usat/random.hpp"

namespace usat {

enum class ClauseOrder : std::uint8_t { kInput, kPermutation };

struct SolveConfig {
  ClauseOrder order = ClauseOrder::kInput;
  std::uint64_t order_seed = 0;  // used by kPermutation
  bool default_free = false;
  bool trace = false;
  std::uint32_t depth_guard_factor = 2;

  /// "input" or "perm:<seed>".
  std::string order_string() const {
    return order == ClauseOrder::kInput ? "input" : "perm:" + std::to_string(order_seed);
  }
  static ClauseOrder parse_order(std::string_view text, std::uint64_t& seed) {
    if (text == "input") return ClauseOrder::kInput;
    if (text.substr(0, 5) == "perm:" && text.size() > 5) {
      seed = std::stoull(std::string(text.substr(5)));
      return ClauseOrder::kPermutation;
    }
    throw std::invalid_argument("clause order must be 'input' or 'perm:<seed>'");
  }

  friend bool operator==(const SolveConfig&, const SolveConfig&) = default;
};

enum class OutcomeKind : std::uint8_t { kSat, kUnsat, kAnomaly };
enum class AnomalyKind : std::uint8_t { kUndefinedAtU4, kUnverifiedSat, kDepthGuard };

constexpr std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::kSat: return "SAT";
    case OutcomeKind::kUnsat: return "UNSAT";
    case OutcomeKind::kAnomaly: return "ANOMALY";
  }
  return "?";
}

constexpr std::string_view to_string(AnomalyKind k) {
  switch (k) {
    case AnomalyKind::kUndefinedAtU4: return "UndefinedAtU4";
    case AnomalyKind::kUnverifiedSat: return "UnverifiedSat";
    case AnomalyKind::kDepthGuard: return "DepthGuard";
  }
  return "?";
}

struct SolverOutcome {
  OutcomeKind kind = OutcomeKind::kSat;

  // kSat
  Assignment assignment;
  Understanding understanding;

  // kUnsat
  ClauseId failing_clause = 0;

  // kAnomaly
  AnomalyKind anomaly = AnomalyKind::kUndefinedAtU4;
  std::optional<ClauseId> anomaly_clause;
  std::optional<Contradiction> contradiction;
  std::string detail;
  std::optional<std::uint64_t> trace_step;  // last trace event before the anomaly

  std::uint64_t ops = 0;
  std::uint64_t guard_trips = 0;
  std::uint64_t d_postcheck_failures = 0;
  std::uint64_t diverged = 0;

  std::shared_ptr<RunContext> run;          // counters and trace of the run
  std::shared_ptr<EngineState> final_state;  // state when solve stopped

  bool is_sat() const { return kind == OutcomeKind::kSat; }
  bool is_unsat() const { return kind == OutcomeKind::kUnsat; }
  bool is_anomaly() const { return kind == OutcomeKind::kAnomaly; }
};

/// Variable x is 1 when x is true, 0 when its negation is true, and
/// `default_free` when both are free.
inline Assignment extract_assignment(const Understanding& u, const Instance& inst,
                                     bool default_free) {
  if (!u.coupled()) throw std::logic_error("extract_assignment: understanding not coupled");
  Assignment a(inst.variable_count, default_free);
  for (std::uint32_t v = 1; v <= inst.variable_count; ++v) {
    Literal x = Literal::positive(v);
    if (u.is_true(x))
      a.set(Variable{v}, true);
    else if (u.is_true(x.negate()))
      a.set(Variable{v}, false);
    else
      a.set(Variable{v}, default_free);
  }
  return a;
}

/// Clause admission order for `cfg`.
inline std::vector<ClauseId> admission_order(const Instance& inst, const SolveConfig& cfg) {
  std::vector<ClauseId> order(inst.clauses.size());
  std::iota(order.begin(), order.end(), ClauseId{0});
  if (cfg.order == ClauseOrder::kPermutation) {
    Rng rng(cfg.order_seed);
    shuffle(order, rng);
  }
  return order;
}

/// Clauses with no literal true under `u`.
inline std::vector<ClauseId> clauses_without_true_literal(const Instance& inst,
                                                          const Understanding& u) {
  std::vector<ClauseId> out;
  for (const Clause& c : inst.clauses) {
    bool any = false;
    for (Literal l : c.literals) any = any || u.is_true(l);
    if (!any) out.push_back(c.id);
  }
  return out;
}

namespace detail {

inline SolverOutcome solve_once(const Instance& inst, const SolveConfig& cfg,
                                const SolveObserver& observer) {
  auto run = std::make_shared<RunContext>();
  run->trace.set_enabled(cfg.trace);
  run->observer = observer;
  EngineState state(std::make_shared<const Instance>(inst), run);
  const DOptions dopts = DOptions::for_instance(inst, cfg.depth_guard_factor);

  SolverOutcome out;
  out.run = run;
  auto finish = [&](SolverOutcome& o) -> SolverOutcome {
    o.ops = run->ops;
    o.guard_trips = run->guard_trips;
    o.d_postcheck_failures = run->d_postcheck_failures;
    o.diverged = run->diverged;
    o.final_state = std::make_shared<EngineState>(state);
    if (run->trace.size() > 0) o.trace_step = run->trace.size() - 1;
    return o;
  };
  auto anomaly = [&](AnomalyKind kind, std::optional<ClauseId> clause, std::string detail) {
    out.kind = OutcomeKind::kAnomaly;
    out.anomaly = kind;
    out.anomaly_clause = clause;
    out.detail = std::move(detail);
    return finish(out);
  };

  for (ClauseId id : admission_order(inst, cfg)) {  // U1
    const Clause& clause = inst.clauses[id];
    state.trace("ADMIT", std::nullopt, id);

    bool all_false = true;
    for (Literal l : clause.literals) all_false = all_false && state.understanding().is_false(l);

    if (all_false) {  // U2
      state.trace("U2_ALL_FALSE", std::nullopt, id);
      const std::uint64_t trips_before = run->guard_trips;
      bool repaired = false;
      for (Literal l : clause.literals) {
        if (auto freed = algorithm_d(state, l, HistorySet{}, dopts)) {
          state = std::move(*freed);
          repaired = true;
          break;
        }
      }
      if (!repaired) {
        if (run->guard_trips > trips_before)
          return anomaly(AnomalyKind::kDepthGuard, id,
                         "algorithm D hit the recursion guard while repairing clause " +
                             std::to_string(id));
        out.kind = OutcomeKind::kUnsat;
        out.failing_clause = id;
        state.trace("UNSAT", std::nullopt, id);
        return finish(out);
      }
    }

    // U3/U4: non-false literals first, clause order within each class, with
    // classes re-read against the current understanding on every pick.
    std::array<bool, 3> done{};
    for (int k = 0; k < 3; ++k) {
      int pick = -1;
      for (int i = 0; i < 3 && pick < 0; ++i)
        if (!done[i] && !state.understanding().is_false(clause.literals[i])) pick = i;
      for (int i = 0; i < 3 && pick < 0; ++i)
        if (!done[i]) pick = i;
      done[pick] = true;
      if (auto bad = state.add_concept(clause, clause.literals[pick])) {
        out.contradiction = bad;
        return anomaly(AnomalyKind::kUndefinedAtU4, id,
                       "adding concept of " + clause.literals[pick].to_string() +
                           " in clause " + std::to_string(id) + ": " +
                           std::string(to_string(bad->reason)) + " at literal " +
                           bad->witness.to_string());
      }
    }
    if (run->observer.on_admitted) run->observer.on_admitted(state);
  }

  out.understanding = state.understanding();
  out.assignment = extract_assignment(state.understanding(), inst, cfg.default_free);

  auto uncovered = clauses_without_true_literal(inst, state.understanding());
  if (!uncovered.empty())
    return anomaly(AnomalyKind::kUnverifiedSat, uncovered.front(),
                   "clause " + std::to_string(uncovered.front()) +
                       " has no literal true under the final understanding");
  auto ev = evaluate(inst, out.assignment);
  if (!ev.satisfied)
    return anomaly(AnomalyKind::kUnverifiedSat, ev.falsified.front(),
                   "clause " + std::to_string(ev.falsified.front()) +
                       " is falsified by the extracted assignment");
  out.kind = OutcomeKind::kSat;
  state.trace("SAT");
  return finish(out);
}

}  // namespace detail

/// Admits the clauses one at a time, keeping an understanding defined with
/// respect to the admitted set. A satisfiable verdict is returned only after
/// the extracted assignment has been re-evaluated against the instance.
inline SolverOutcome solve(const Instance& inst, const SolveConfig& cfg = {},
                           const SolveObserver& observer = {}) {
  SolverOutcome out = detail::solve_once(inst, cfg, observer);
  if (out.is_anomaly() && out.anomaly == AnomalyKind::kUnverifiedSat && !cfg.trace) {
    // Unverified verdicts always carry the full trace.
    SolveConfig traced = cfg;
    traced.trace = true;
    out = detail::solve_once(inst, traced, observer);
  }
  return out;
}

}  // namespace usat

#endif  // USAT_SOLVER_HPP
