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

#ifndef USAT_ORACLE_HPP
#define USAT_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "usat/cnf.hpp"

namespace usat {

enum class OracleMethod : std::uint8_t { kBrute, kDpll };

constexpr std::string_view to_string(OracleMethod m) {
  return m == OracleMethod::kBrute ? "brute" : "dpll";
}

struct OracleVerdict {
  bool sat = false;
  Assignment model;  // total when sat
  OracleMethod method = OracleMethod::kBrute;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint32_t kBruteForceMaxVars = 30;

/// Tries all 2^n assignments counting upward from all-zeros, variable 1
/// being the most significant bit. Returns the first model.
inline OracleVerdict brute_force(const Instance& inst) {
  const std::uint32_t n = inst.variable_count;
  if (n > kBruteForceMaxVars)
    throw std::invalid_argument("brute_force: " + std::to_string(n) +
                                " variables exceeds the limit of " +
                                std::to_string(kBruteForceMaxVars));
  // Per clause: literal bit positions and required bit values.
  struct Packed {
    std::uint64_t mask[3];
    bool want[3];
  };
  std::vector<Packed> packed;
  for (const Clause& c : inst.clauses) {
    Packed p{};
    for (int i = 0; i < 3; ++i) {
      p.mask[i] = std::uint64_t{1} << (n - c.literals[i].variable().id);
      p.want[i] = !c.literals[i].is_negative();
    }
    packed.push_back(p);
  }

  OracleVerdict v;
  v.method = OracleMethod::kBrute;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ++v.nodes;
    bool ok = true;
    for (const Packed& p : packed) {
      if (((bits & p.mask[0]) != 0) != p.want[0] && ((bits & p.mask[1]) != 0) != p.want[1] &&
          ((bits & p.mask[2]) != 0) != p.want[2]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      v.sat = true;
      v.model = Assignment(n);
      for (std::uint32_t var = 1; var <= n; ++var)
        v.model.set(Variable{var}, ((bits >> (n - var)) & 1) != 0);
      return v;
    }
  }
  return v;
}

namespace detail {

class Dpll {
 public:
  explicit Dpll(const Instance& inst) : inst_(inst), values_(inst.variable_count + 1, -1) {}

  bool search() {
    ++nodes_;
    std::vector<std::uint32_t> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    std::uint32_t var = pick();
    if (var == 0) return true;
    for (int value : {1, 0}) {
      values_[var] = static_cast<std::int8_t>(value);
      if (search()) return true;
      values_[var] = -1;
    }
    undo(trail);
    return false;
  }

  Assignment model() const {
    Assignment a(inst_.variable_count);
    for (std::uint32_t v = 1; v <= inst_.variable_count; ++v)
      a.set(Variable{v}, values_[v] == 1);
    return a;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int lit_value(Literal l) const {
    int v = values_[l.variable().id];
    if (v < 0) return -1;
    return l.is_negative() ? 1 - v : v;
  }

  // Unit propagation to a fixpoint; false on an all-false clause.
  bool propagate(std::vector<std::uint32_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : inst_.clauses) {
        int unassigned = 0;
        Literal last{};
        bool sat = false;
        for (Literal l : c.literals) {
          int v = lit_value(l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) {
            ++unassigned;
            last = l;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          values_[last.variable().id] = last.is_negative() ? 0 : 1;
          trail.push_back(last.variable().id);
          changed = true;
        }
      }
    }
    return true;
  }

  // Lowest unassigned variable occurring in a clause not yet satisfied.
  std::uint32_t pick() const {
    std::uint32_t best = 0;
    for (const Clause& c : inst_.clauses) {
      bool sat = false;
      for (Literal l : c.literals) sat = sat || lit_value(l) == 1;
      if (sat) continue;
      for (Literal l : c.literals) {
        std::uint32_t v = l.variable().id;
        if (values_[v] < 0 && (best == 0 || v < best)) best = v;
      }
    }
    return best;
  }

  void undo(const std::vector<std::uint32_t>& trail) {
    for (std::uint32_t v : trail) values_[v] = -1;
  }

  const Instance& inst_;
  std::vector<std::int8_t> values_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Plain DPLL: unit propagation, then split on the lowest unassigned
/// variable of an open clause, true first. No learning, no heuristics.
/// Variables left open in a model are set to 0.
inline OracleVerdict dpll(const Instance& inst) {
  detail::Dpll d(inst);
  OracleVerdict v;
  v.method = OracleMethod::kDpll;
  v.sat = d.search();
  v.nodes = d.nodes();
  if (v.sat) v.model = d.model();
  return v;
}

inline OracleVerdict run_oracle(const Instance& inst, OracleMethod method) {
  return method == OracleMethod::kBrute ? brute_force(inst) : dpll(inst);
}

}  // namespace usat

#endif  // USAT_ORACLE_HPP
