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

#ifndef USAT_ALGORITHMS_HPP
#define USAT_ALGORITHMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "usat/engine.hpp"

namespace usat {

/// Literals whose freeing is already being attempted further up the
/// algorithm D call chain.
class HistorySet {
 public:
  HistorySet() = default;

  bool contains(Literal l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }
  HistorySet with(Literal l) const {
    HistorySet out = *this;
    auto it = std::lower_bound(out.lits_.begin(), out.lits_.end(), l);
    if (it == out.lits_.end() || *it != l) out.lits_.insert(it, l);
    return out;
  }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const std::vector<Literal>& literals() const { return lits_; }

 private:
  std::vector<Literal> lits_;
};

/// Can `lambda` be made true? Works on forks only: pins `lambda` true, then
/// for each concept of `lambda` (ascending clause id) forbids both members
/// from being true and recomputes from {lambda, members}. True on the first
/// concept that recomputes without contradiction.
///
/// Callers wanting the check over the clauses mentioning `lambda` pass
/// `s.restricted_to(lambda)`.
inline bool algorithm_g(const EngineState& s, Literal lambda) {
  if (!s.understanding().is_free(lambda))
    throw std::logic_error("algorithm_g: literal " + lambda.to_string() + " is not free");
  s.trace("G_ENTER", lambda);
  if (s.run().observer.on_algorithm_g) s.run().observer.on_algorithm_g(s, lambda);

  auto finish = [&](bool result) {
    s.trace("G_RESULT", lambda, std::nullopt, std::nullopt,
            result ? TruthValue::kTrue : TruthValue::kFalse);
    return result;
  };

  EngineState assumed = s.fork();
  if (!assumed.pin_true(lambda)) return finish(false);
  s.trace("G_PIN", lambda);

  for (const Concept& c : assumed.store().focused_on(lambda)) {
    EngineState attempt = assumed.fork();
    if (!attempt.add_not_true(c.members[0]) || !attempt.add_not_true(c.members[1]))
      continue;
    if (!attempt.compute_fixpoint({lambda, c.members[0], c.members[1]}))
      return finish(true);
  }
  return finish(false);
}

/// Structural sufficient conditions for `lambda` to be made true: some
/// concept {l1, l2} of `lambda` such that
///   (a) no concept of the negation of `lambda` has both l1 and l2 as
///       members, and
///   (b) no two concepts of the negation are {l1, x} and {l2, ~x}.
/// Used as an independent cross-check of algorithm_g.
inline bool lemma_g_conditions(const EngineState& s, Literal lambda) {
  if (!s.understanding().is_free(lambda))
    throw std::logic_error("lemma_g_conditions: literal " + lambda.to_string() +
                           " is not free");
  const auto pos = s.store().focused_on(lambda);
  const auto neg = s.store().focused_on(lambda.negate());

  auto other = [](const Concept& c, Literal l) {
    return c.members[0] == l ? c.members[1] : c.members[0];
  };

  for (const Concept& c : pos) {
    Literal l1 = c.members[0], l2 = c.members[1];
    bool cond_a = std::none_of(neg.begin(), neg.end(), [&](const Concept& d) {
      return d.has_member(l1) && d.has_member(l2);
    });
    bool cond_b = true;
    for (const Concept& d1 : neg) {
      if (!d1.has_member(l1)) continue;
      Literal x = other(d1, l1);
      for (const Concept& d2 : neg) {
        if (d2.has_member(l2) && other(d2, l2) == x.negate()) cond_b = false;
      }
    }
    if (cond_a && cond_b) return true;
  }
  return false;
}

struct DOptions {
  /// Recursion depth beyond which algorithm D gives up on a branch.
  std::size_t depth_limit = 0;  // 0 selects 2 * literals + 1

  static DOptions for_instance(const Instance& inst, std::uint32_t factor = 2) {
    return DOptions{static_cast<std::size_t>(factor) * inst.literal_count() + 1};
  }
};

namespace detail {

inline std::optional<EngineState> algorithm_d_impl(const EngineState& s, Literal lambda,
                                                   const HistorySet& history,
                                                   std::size_t depth, std::size_t limit) {
  if (!s.understanding().is_false(lambda))
    throw std::logic_error("algorithm_d: literal " + lambda.to_string() + " is not false");
  if (depth > limit) {
    ++s.run().guard_trips;
    s.trace("D_GUARD", lambda);
    return std::nullopt;
  }
  s.trace("D_ENTER", lambda);

  auto fail = [&]() -> std::optional<EngineState> {
    s.trace("D_RESULT", lambda, std::nullopt, std::nullopt, TruthValue::kFalse);
    return std::nullopt;
  };

  EngineState current = s.fork();
  std::set<ClauseId> considered;  // concepts of ~lambda, keyed by clause

  for (;;) {
    // D1: the C+ concepts of ~lambda, re-derived after every successful pin.
    std::optional<Concept> next;
    for (const Concept& c : current.store().minus_set(lambda, current.understanding())) {
      if (!considered.count(c.clause)) {
        next = c;
        break;
      }
    }

    if (!next) {
      if (current.compute_fixpoint({lambda}) || !current.understanding().is_free(lambda)) {
        ++s.run().d_postcheck_failures;
        s.trace("D_GAP", lambda);
        return fail();
      }
      s.trace("D_RESULT", lambda, std::nullopt, std::nullopt, TruthValue::kTrue);
      return current;
    }
    considered.insert(next->clause);
    s.trace("D_CONCEPT", lambda, next->clause);

    bool resolved = false;
    for (Literal member : next->members) {  // D2
      s.trace("D_MEMBER", member, next->clause);
      if (history.contains(member)) continue;  // D3

      std::optional<EngineState> freed;  // D4
      if (current.understanding().is_false(member)) {
        s.trace("D_RECURSE", member, next->clause);
        freed = algorithm_d_impl(current, member, history.with(lambda), depth + 1, limit);
        if (!freed) continue;
      }
      const EngineState& base = freed ? *freed : current;
      if (!base.understanding().is_free(member)) continue;

      // D5: can member be true over the clauses that mention it?
      if (!algorithm_g(base.restricted_to(member), member)) continue;

      EngineState pinned = base.fork();
      if (!pinned.pin_true(member)) continue;
      if (pinned.compute_fixpoint({member})) continue;
      current = std::move(pinned);
      resolved = true;
      break;
    }
    if (!resolved) return fail();
  }
}

}  // namespace detail

/// Tries to rewrite `s` into an equivalent state in which the false literal
/// `lambda` is free. Every concept of C[lambda]- gets one member pinned true,
/// freeing false members recursively first and checking each with
/// algorithm G. Returns nullopt when some concept has no usable member;
/// `s` is never modified.
inline std::optional<EngineState> algorithm_d(const EngineState& s, Literal lambda,
                                              const HistorySet& history = {},
                                              DOptions opts = {}) {
  std::size_t limit = opts.depth_limit != 0
                          ? opts.depth_limit
                          : DOptions::for_instance(s.instance()).depth_limit;
  return detail::algorithm_d_impl(s, lambda, history, 0, limit);
}

}  // namespace usat

#endif  // USAT_ALGORITHMS_HPP
