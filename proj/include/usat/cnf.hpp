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

#ifndef USAT_CNF_HPP
#define USAT_CNF_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "usat/literal.hpp"

namespace usat {

using ClauseId = std::uint32_t;

/// Three pairwise distinct literals read as a disjunction. A clause may hold
/// a variable in both polarities.
struct Clause {
  ClauseId id = 0;
  std::array<Literal, 3> literals{};

  bool contains(Literal l) const {
    return std::find(literals.begin(), literals.end(), l) != literals.end();
  }
  bool mentions(Variable v) const {
    return std::any_of(literals.begin(), literals.end(),
                       [v](Literal l) { return l.variable() == v; });
  }
  /// Literal codes in ascending order; equal keys mean equal literal sets.
  std::array<std::uint32_t, 3> key() const {
    std::array<std::uint32_t, 3> k{literals[0].index(), literals[1].index(),
                                   literals[2].index()};
    std::sort(k.begin(), k.end());
    return k;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Raised for structurally invalid 3SAT input. `line` is 1-based, or 0 when
/// the problem is not tied to a line of text.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Instance {
  std::uint32_t variable_count = 0;
  std::vector<Clause> clauses;
  std::size_t dedup_count = 0;

  std::size_t size() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }
  std::uint32_t literal_count() const { return 2 * variable_count; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Accumulates clauses into an Instance, collapsing repeated literals and
/// dropping repeated clauses.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(std::uint32_t variable_count) {
    inst_.variable_count = variable_count;
  }

  /// Returns false when the clause duplicates one already present.
  /// Throws FormatError when the collapsed clause is not a 3SAT clause.
  bool add(std::span<const Literal> lits, std::size_t line = 0) {
    if (lits.empty()) throw FormatError("empty clause", line);
    std::vector<Literal> distinct;
    for (Literal l : lits) {
      if (l.variable().id == 0 || l.variable().id > inst_.variable_count)
        throw FormatError("variable " + std::to_string(l.variable().id) +
                              " exceeds declared count " +
                              std::to_string(inst_.variable_count),
                          line);
      if (std::find(distinct.begin(), distinct.end(), l) == distinct.end())
        distinct.push_back(l);
    }
    if (distinct.size() != 3)
      throw FormatError("clause has " + std::to_string(distinct.size()) +
                            " distinct literals, expected 3",
                        line);
    Clause c;
    c.id = static_cast<ClauseId>(inst_.clauses.size());
    std::copy(distinct.begin(), distinct.end(), c.literals.begin());
    if (!seen_.insert(c.key()).second) {
      ++inst_.dedup_count;
      return false;
    }
    inst_.clauses.push_back(c);
    return true;
  }

  bool add(std::initializer_list<int> dimacs) {
    std::vector<Literal> lits;
    for (int v : dimacs) lits.push_back(Literal::from_dimacs(v));
    return add(lits);
  }

  bool contains(const std::array<std::uint32_t, 3>& key) const {
    return seen_.count(key) != 0;
  }
  std::size_t size() const { return inst_.clauses.size(); }

  Instance build() && { return std::move(inst_); }
  Instance build() const& { return inst_; }

 private:
  Instance inst_;
  std::set<std::array<std::uint32_t, 3>> seen_;
};

/// Convenience for tests and tools: clauses given in DIMACS integers.
inline Instance make_instance(std::uint32_t variable_count,
                              std::initializer_list<std::initializer_list<int>> clauses) {
  InstanceBuilder b(variable_count);
  for (auto c : clauses) b.add(c);
  return std::move(b).build();
}

/// Instance with clauses `keep` of `inst`, renumbered densely in order.
inline Instance sub_instance(const Instance& inst, std::span<const ClauseId> keep) {
  Instance out;
  out.variable_count = inst.variable_count;
  for (ClauseId id : keep) {
    Clause c = inst.clauses.at(id);
    c.id = static_cast<ClauseId>(out.clauses.size());
    out.clauses.push_back(c);
  }
  return out;
}

/// Truth assignment over variables 1..n, possibly partial. Unassigned
/// variables evaluate to `default_free`.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::uint32_t variable_count, bool default_free = false)
      : values_(variable_count), default_free_(default_free) {}

  std::uint32_t variable_count() const {
    return static_cast<std::uint32_t>(values_.size());
  }
  bool default_free() const { return default_free_; }
  void set_default_free(bool v) { default_free_ = v; }

  void set(Variable v, bool value) {
    if (v.id == 0) throw std::out_of_range("variable 0");
    if (v.id > values_.size()) values_.resize(v.id);
    values_[v.id - 1] = value;
  }
  void unset(Variable v) {
    if (v.id >= 1 && v.id <= values_.size()) values_[v.id - 1].reset();
  }
  std::optional<bool> get(Variable v) const {
    if (v.id == 0 || v.id > values_.size()) return std::nullopt;
    return values_[v.id - 1];
  }
  bool value(Variable v) const { return get(v).value_or(default_free_); }
  bool is_true(Literal l) const { return value(l.variable()) != l.is_negative(); }

  /// Highest variable carrying an explicit value, 0 if none.
  std::uint32_t max_assigned() const {
    for (std::size_t i = values_.size(); i > 0; --i)
      if (values_[i - 1]) return static_cast<std::uint32_t>(i);
    return 0;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::optional<bool>> values_;
  bool default_free_ = false;
};

struct Evaluation {
  bool satisfied = true;
  std::vector<ClauseId> falsified;
};

/// Lists every clause whose three literals are all false under `a`.
inline Evaluation evaluate(const Instance& inst, const Assignment& a) {
  if (a.max_assigned() > inst.variable_count)
    throw std::invalid_argument("assignment references variable " +
                                std::to_string(a.max_assigned()) +
                                " outside the instance");
  Evaluation ev;
  for (const Clause& c : inst.clauses) {
    bool sat = std::any_of(c.literals.begin(), c.literals.end(),
                           [&](Literal l) { return a.is_true(l); });
    if (!sat) ev.falsified.push_back(c.id);
  }
  ev.satisfied = ev.falsified.empty();
  return ev;
}

}  // namespace usat

#endif  // USAT_CNF_HPP
