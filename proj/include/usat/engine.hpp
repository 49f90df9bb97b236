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

#ifndef USAT_ENGINE_HPP
#define USAT_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "usat/cnf.hpp"
#include "usat/trace.hpp"
#include "usat/understanding.hpp"

namespace usat {

enum class ContradictionReason : std::uint8_t {
  kUndefined,        // concept set of type C+ while the minus set is nonempty
  kPinViolated,      // formula forces the opposite of a pinned value
  kNotTrueViolated,  // formula forces true on a literal constrained not true
  kPinConflict,      // a new pin or exclusion clashes with the overlay
  kDiverged,         // the change budget of one fixpoint run was exhausted
};

constexpr std::string_view to_string(ContradictionReason r) {
  switch (r) {
    case ContradictionReason::kUndefined: return "undefined";
    case ContradictionReason::kPinViolated: return "pin-violated";
    case ContradictionReason::kNotTrueViolated: return "not-true-violated";
    case ContradictionReason::kPinConflict: return "pin-conflict";
    case ContradictionReason::kDiverged: return "diverged";
  }
  return "?";
}

struct Contradiction {
  Literal witness;
  ContradictionReason reason = ContradictionReason::kUndefined;

  friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

/// Outcome of evaluating the case definition for one literal. `value` is
/// empty when the understanding is undefined there.
struct Reevaluation {
  std::optional<TruthValue> value;
  ContradictionReason reason = ContradictionReason::kUndefined;
};

/// Admitted clauses, the understanding, the concept store and the constraint
/// overlay. Copies are independent except for the RunContext, which all
/// forks of one run share so that operation counts and trace events
/// accumulate across speculative work.
class EngineState {
 public:
  /// Per fixpoint call, the number of value changes allowed is this factor
  /// times (literals + concepts + 1).
  static constexpr std::size_t kChangeBudgetFactor = 16;

  explicit EngineState(std::shared_ptr<const Instance> inst,
                       std::shared_ptr<RunContext> run = std::make_shared<RunContext>())
      : inst_(std::move(inst)),
        run_(std::move(run)),
        admitted_(inst_->clauses.size(), false),
        understanding_(inst_->variable_count),
        store_(inst_->variable_count),
        overlay_(inst_->variable_count) {}

  explicit EngineState(const Instance& inst)
      : EngineState(std::make_shared<const Instance>(inst)) {}

  const Instance& instance() const { return *inst_; }
  const std::shared_ptr<const Instance>& instance_ptr() const { return inst_; }
  const Understanding& understanding() const { return understanding_; }
  TruthValue value(Literal l) const { return understanding_[l]; }
  const ConceptStore& store() const { return store_; }
  const ConstraintOverlay& overlay() const { return overlay_; }
  RunContext& run() const { return *run_; }
  const std::shared_ptr<RunContext>& run_ptr() const { return run_; }
  std::uint64_t op_counter() const { return run_->ops; }

  bool admitted(ClauseId id) const { return admitted_.at(id); }
  std::vector<ClauseId> admitted_clauses() const {
    std::vector<ClauseId> out;
    for (ClauseId i = 0; i < admitted_.size(); ++i)
      if (admitted_[i]) out.push_back(i);
    return out;
  }

  void trace(std::string_view kind, std::optional<Literal> lit = std::nullopt,
             std::optional<ClauseId> clause = std::nullopt,
             std::optional<TruthValue> old_value = std::nullopt,
             std::optional<TruthValue> new_value = std::nullopt) const {
    run_->trace.record(kind, lit, run_->ops, clause, old_value, new_value);
  }

  /// The case definition for `l` with no constraints applied.
  std::optional<TruthValue> formula_value(Literal l) const {
    bool plus = store_.has_plus(l, understanding_);              // C[l] of type C+
    bool minus = store_.has_plus(l.negate(), understanding_);    // C[l]- nonempty
    if (plus && minus) return std::nullopt;
    if (plus) return TruthValue::kTrue;
    if (minus) return TruthValue::kFalse;
    return TruthValue::kFree;
  }

  /// The case definition for `l` with the overlay applied: a pin wins unless
  /// the formula forces the opposite value, and a not-true literal may not be
  /// forced true.
  Reevaluation reevaluate(Literal l) const {
    auto f = formula_value(l);
    if (!f) return {std::nullopt, ContradictionReason::kUndefined};
    if (auto pin = overlay_.pin(l)) {
      if (*f != TruthValue::kFree && *f != *pin)
        return {std::nullopt, ContradictionReason::kPinViolated};
      return {*pin, {}};
    }
    if (*f == TruthValue::kTrue && overlay_.is_not_true(l))
      return {std::nullopt, ContradictionReason::kNotTrueViolated};
    return {*f, {}};
  }

  std::optional<TruthValue> reevaluate_literal(Literal l) const { return reevaluate(l).value; }

  /// Worklist recomputation from `seeds` (deduplicated, processed in literal
  /// index order, then FIFO). Each popped literal is reevaluated together
  /// with its negation; a change enqueues the focus of every concept that
  /// has either as a member.
  ///
  /// A literal that evaluates to undefined keeps its stored value and is
  /// parked. Contradictions are judged once the worklist drains: a parked
  /// literal that is still undefined then is the witness. On contradiction
  /// all value changes are undone.
  std::optional<Contradiction> compute_fixpoint(std::vector<Literal> seeds) {
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    const std::size_t literal_count = 2 * static_cast<std::size_t>(inst_->variable_count);
    std::deque<Literal> work;
    std::vector<bool> queued(literal_count, false);
    std::vector<bool> parked(literal_count, false);
    auto enqueue = [&](Literal l) {
      if (!queued[l.index()]) {
        queued[l.index()] = true;
        work.push_back(l);
      }
    };
    for (Literal s : seeds) enqueue(s);

    std::vector<std::pair<Literal, TruthValue>> undo;
    const std::size_t budget = kChangeBudgetFactor * (literal_count + store_.size() + 1);
    std::size_t changes = 0;

    auto fail = [&](Literal witness, ContradictionReason reason) {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it)
        understanding_.set(it->first, it->second);
      if (reason == ContradictionReason::kDiverged) ++run_->diverged;
      trace("CONTRADICTION", witness);
      return Contradiction{witness, reason};
    };

    // Both polarities at once; nullopt-valued side reports the failure.
    auto evaluate_pair = [&](Literal l) -> std::pair<Reevaluation, Literal> {
      Reevaluation pos = reevaluate(l);
      Reevaluation neg = reevaluate(l.negate());
      run_->ops += 2;
      if (!pos.value) return {pos, l};
      if (!neg.value) return {neg, l.negate()};
      if (*neg.value != opposite(*pos.value))
        return {{std::nullopt, ContradictionReason::kPinViolated}, l};
      return {pos, l};
    };

    for (;;) {
      while (!work.empty()) {
        Literal l = work.front();
        work.pop_front();
        queued[l.index()] = false;

        auto [r, at] = evaluate_pair(l);
        if (!r.value) {
          parked[l.index()] = true;
          continue;
        }
        parked[l.index()] = false;

        TruthValue old = understanding_[l];
        if (old == *r.value) continue;
        if (++changes > budget) return fail(l, ContradictionReason::kDiverged);
        undo.emplace_back(l, old);
        understanding_.set(l, *r.value);
        trace("VALUE", l, std::nullopt, old, *r.value);

        for (Literal side : {l, l.negate()})
          for (ConceptStore::Index i : store_.by_member(side)) enqueue(store_[i].focus);
      }

      bool requeued = false;
      for (std::size_t i = 0; i < literal_count; ++i) {
        if (!parked[i]) continue;
        Literal l = Literal::from_index(static_cast<std::uint32_t>(i));
        auto [r, at] = evaluate_pair(l);
        if (!r.value) return fail(at, r.reason);
        parked[i] = false;
        enqueue(l);
        requeued = true;
      }
      if (!requeued) return std::nullopt;
    }
  }

  /// Inserts the concept of `focus` in `clause`, admits the clause and
  /// recomputes from `focus`. On contradiction nothing changes.
  std::optional<Contradiction> add_concept(const Clause& clause, Literal focus) {
    Concept c = Concept::of(clause, focus);
    store_.insert(c);
    bool was_admitted = admitted_.at(clause.id);
    admitted_[clause.id] = true;
    trace("CONCEPT", focus, clause.id);
    if (auto bad = compute_fixpoint({focus})) {
      store_.pop_back();
      admitted_[clause.id] = was_admitted;
      return bad;
    }
    return std::nullopt;
  }

  /// Pins `l` true and its negation false without recomputing.
  bool pin_true(Literal l) {
    if (!overlay_.pin_true(l)) return false;
    trace("PIN", l);
    return true;
  }

  bool add_not_true(Literal l) {
    if (!overlay_.add_not_true(l)) return false;
    trace("NOT_TRUE", l);
    return true;
  }

  /// Independent copy sharing this run's counters and trace.
  EngineState fork() const { return *this; }

  /// Copy whose admitted clauses and concepts are limited to clauses that
  /// contain `l` or its negation. Values and overlay are kept as they are.
  EngineState restricted_to(Literal l) const {
    EngineState out = *this;
    const Instance& inst = *inst_;
    auto relevant = [&](ClauseId id) {
      const Clause& c = inst.clauses[id];
      return c.contains(l) || c.contains(l.negate());
    };
    for (ClauseId i = 0; i < admitted_.size(); ++i)
      out.admitted_[i] = admitted_[i] && relevant(i);
    out.store_ = store_.filtered([&](const Concept& c) { return relevant(c.clause); });
    return out;
  }

  /// Unpinned literals whose stored value differs from the case definition.
  std::vector<Literal> unsound_literals() const {
    std::vector<Literal> out;
    for (std::uint32_t i = 0; i < 2 * inst_->variable_count; ++i) {
      Literal l = Literal::from_index(i);
      if (overlay_.is_pinned(l)) continue;
      auto r = reevaluate_literal(l);
      if (!r || *r != understanding_[l]) out.push_back(l);
    }
    return out;
  }

  /// Every concept's origin clause is admitted and the indices match.
  bool well_formed() const {
    for (const Concept& c : store_.concepts())
      if (!admitted_.at(c.clause)) return false;
    return store_.indices_consistent() && understanding_.coupled();
  }

  /// State equality; the shared RunContext is not part of the state.
  friend bool operator==(const EngineState& a, const EngineState& b) {
    return a.admitted_ == b.admitted_ && a.understanding_ == b.understanding_ &&
           a.store_ == b.store_ && a.overlay_ == b.overlay_;
  }

 private:
  std::shared_ptr<const Instance> inst_;
  std::shared_ptr<RunContext> run_;
  std::vector<bool> admitted_;
  Understanding understanding_;
  ConceptStore store_;
  ConstraintOverlay overlay_;
};

inline EngineState fork_state(const EngineState& s) { return s.fork(); }

}  // namespace usat

#endif  // USAT_ENGINE_HPP
