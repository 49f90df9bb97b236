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

#ifndef USAT_UNDERSTANDING_HPP
#define USAT_UNDERSTANDING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "usat/cnf.hpp"
#include "usat/literal.hpp"

namespace usat {

/// Value of a literal under an understanding. `kFree` reads "unassigned".
enum class TruthValue : std::uint8_t { kFree, kTrue, kFalse };

constexpr TruthValue opposite(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue: return TruthValue::kFalse;
    case TruthValue::kFalse: return TruthValue::kTrue;
    default: return TruthValue::kFree;
  }
}

constexpr std::string_view to_string(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue: return "t";
    case TruthValue::kFalse: return "f";
    default: return "e";
  }
}

/// Total map literal -> {t, f, free} kept coupled under negation: setting a
/// literal always sets its negation to the opposite value.
class Understanding {
 public:
  Understanding() = default;
  explicit Understanding(std::uint32_t variable_count)
      : values_(2 * static_cast<std::size_t>(variable_count), TruthValue::kFree) {}

  std::uint32_t variable_count() const {
    return static_cast<std::uint32_t>(values_.size() / 2);
  }

  TruthValue operator[](Literal l) const {
    return l.index() < values_.size() ? values_[l.index()] : TruthValue::kFree;
  }
  TruthValue value(Literal l) const { return (*this)[l]; }
  bool is_true(Literal l) const { return value(l) == TruthValue::kTrue; }
  bool is_false(Literal l) const { return value(l) == TruthValue::kFalse; }
  bool is_free(Literal l) const { return value(l) == TruthValue::kFree; }

  void set(Literal l, TruthValue v) {
    values_.at(l.index()) = v;
    values_.at(l.negate().index()) = opposite(v);
  }

  /// True iff every literal agrees with its negation.
  bool coupled() const {
    for (std::size_t i = 0; i + 1 < values_.size(); i += 2)
      if (values_[i + 1] != opposite(values_[i])) return false;
    return true;
  }

  friend bool operator==(const Understanding&, const Understanding&) = default;

 private:
  std::vector<TruthValue> values_;
};

enum class ConceptType : std::uint8_t { kPlus, kStar };
enum class ConceptSetType : std::uint8_t { kStarSet, kPlusSet };

/// The context of `focus` in clause `clause`: the clause's other two
/// literals. Identity is (clause, focus).
struct Concept {
  ClauseId clause = 0;
  Literal focus;
  std::array<Literal, 2> members{};

  static Concept of(const Clause& c, Literal focus) {
    Concept k;
    k.clause = c.id;
    k.focus = focus;
    std::size_t j = 0;
    for (Literal l : c.literals) {
      if (l == focus) continue;
      if (j == 2) throw std::invalid_argument("focus literal not in clause");
      k.members[j++] = l;
    }
    if (j != 2) throw std::invalid_argument("focus literal not in clause");
    return k;
  }

  bool has_member(Literal l) const { return members[0] == l || members[1] == l; }

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// C+ when neither member is true: (free, free), (false, false) and
/// (free, false). C* otherwise: (true, true), (free, true), (true, false).
inline ConceptType concept_type(const Concept& c, const Understanding& u) {
  return (u.is_true(c.members[0]) || u.is_true(c.members[1])) ? ConceptType::kStar
                                                              : ConceptType::kPlus;
}

/// Caller handles the empty set; an empty range classifies as kStarSet.
template <class Range>
ConceptSetType concept_set_type(const Range& concepts, const Understanding& u) {
  for (const Concept& c : concepts)
    if (concept_type(c, u) == ConceptType::kPlus) return ConceptSetType::kPlusSet;
  return ConceptSetType::kStarSet;
}

/// All concepts added so far, indexed by focus literal and by member literal.
class ConceptStore {
 public:
  using Index = std::uint32_t;

  ConceptStore() = default;
  explicit ConceptStore(std::uint32_t variable_count)
      : by_focus_(2 * static_cast<std::size_t>(variable_count)),
        by_member_(2 * static_cast<std::size_t>(variable_count)) {}

  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  const Concept& operator[](Index i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }

  std::span<const Index> by_focus(Literal l) const { return by_focus_.at(l.index()); }
  std::span<const Index> by_member(Literal l) const { return by_member_.at(l.index()); }

  bool contains(ClauseId clause, Literal focus) const {
    for (Index i : by_focus(focus))
      if (concepts_[i].clause == clause) return true;
    return false;
  }

  Index insert(const Concept& c) {
    if (contains(c.clause, c.focus))
      throw std::logic_error("concept (" + std::to_string(c.clause) + ", " +
                             c.focus.to_string() + ") already present");
    auto i = static_cast<Index>(concepts_.size());
    concepts_.push_back(c);
    by_focus_.at(c.focus.index()).push_back(i);
    by_member_.at(c.members[0].index()).push_back(i);
    by_member_.at(c.members[1].index()).push_back(i);
    return i;
  }

  /// Undoes the most recent insert.
  void pop_back() {
    const Concept& c = concepts_.back();
    by_focus_[c.focus.index()].pop_back();
    by_member_[c.members[0].index()].pop_back();
    by_member_[c.members[1].index()].pop_back();
    concepts_.pop_back();
  }

  /// Copy holding only the concepts for which `keep` holds, in order.
  template <class Pred>
  ConceptStore filtered(Pred keep) const {
    ConceptStore out;
    out.by_focus_.resize(by_focus_.size());
    out.by_member_.resize(by_member_.size());
    for (const Concept& c : concepts_)
      if (keep(c)) out.insert(c);
    return out;
  }

  /// Concepts focused on `l`, sorted by origin clause.
  std::vector<Concept> focused_on(Literal l) const {
    std::vector<Concept> out;
    for (Index i : by_focus(l)) out.push_back(concepts_[i]);
    std::sort(out.begin(), out.end(),
              [](const Concept& a, const Concept& b) { return a.clause < b.clause; });
    return out;
  }

  /// The C+ concepts of the negation of `l`, sorted by origin clause.
  std::vector<Concept> minus_set(Literal l, const Understanding& u) const {
    std::vector<Concept> out;
    for (Index i : by_focus(l.negate()))
      if (concept_type(concepts_[i], u) == ConceptType::kPlus) out.push_back(concepts_[i]);
    std::sort(out.begin(), out.end(),
              [](const Concept& a, const Concept& b) { return a.clause < b.clause; });
    return out;
  }

  bool has_plus(Literal focus, const Understanding& u) const {
    for (Index i : by_focus(focus))
      if (concept_type(concepts_[i], u) == ConceptType::kPlus) return true;
    return false;
  }

  /// Checks that both indices describe exactly the stored concepts.
  bool indices_consistent() const {
    std::vector<std::size_t> focus_hits(concepts_.size()), member_hits(concepts_.size());
    for (std::size_t l = 0; l < by_focus_.size(); ++l) {
      for (Index i : by_focus_[l]) {
        if (i >= concepts_.size() || concepts_[i].focus.index() != l) return false;
        ++focus_hits[i];
      }
      for (Index i : by_member_[l]) {
        if (i >= concepts_.size() || !concepts_[i].has_member(Literal::from_index(
                                         static_cast<std::uint32_t>(l))))
          return false;
        ++member_hits[i];
      }
    }
    for (std::size_t i = 0; i < concepts_.size(); ++i)
      if (focus_hits[i] != 1 || member_hits[i] != 2) return false;
    return true;
  }

  friend bool operator==(const ConceptStore&, const ConceptStore&) = default;

 private:
  std::vector<Concept> concepts_;
  std::vector<std::vector<Index>> by_focus_;
  std::vector<std::vector<Index>> by_member_;
};

/// Externally imposed assumptions: pinned values and "not true" exclusions.
class ConstraintOverlay {
 public:
  ConstraintOverlay() = default;
  explicit ConstraintOverlay(std::uint32_t variable_count)
      : pins_(2 * static_cast<std::size_t>(variable_count), 0),
        not_true_(2 * static_cast<std::size_t>(variable_count), false) {}

  std::optional<TruthValue> pin(Literal l) const {
    switch (pins_.at(l.index())) {
      case 1: return TruthValue::kTrue;
      case 2: return TruthValue::kFalse;
      default: return std::nullopt;
    }
  }
  bool is_pinned(Literal l) const { return pins_.at(l.index()) != 0; }
  bool is_not_true(Literal l) const { return not_true_.at(l.index()); }

  /// Pins `l` true and its negation false. Returns false, leaving the
  /// overlay unchanged, when that conflicts with an existing constraint.
  bool pin_true(Literal l) {
    if (pin(l) == TruthValue::kTrue) return true;
    if (is_pinned(l) || is_not_true(l)) return false;
    pins_[l.index()] = 1;
    pins_[l.negate().index()] = 2;
    return true;
  }

  /// Forbids `l` from being true. Returns false when `l` is pinned true.
  bool add_not_true(Literal l) {
    if (pin(l) == TruthValue::kTrue) return false;
    not_true_.at(l.index()) = true;
    return true;
  }

  std::size_t pin_count() const {
    return static_cast<std::size_t>(std::count(pins_.begin(), pins_.end(), 1));
  }

  friend bool operator==(const ConstraintOverlay&, const ConstraintOverlay&) = default;

 private:
  std::vector<std::uint8_t> pins_;  // 0 none, 1 true, 2 false
  std::vector<bool> not_true_;
};

}  // namespace usat

#endif  // USAT_UNDERSTANDING_HPP
