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

#ifndef USAT_GENERATE_HPP
#define USAT_GENERATE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "usat/cnf.hpp"
#include "usat/random.hpp"

namespace usat {

struct GenSpec {
  std::uint32_t n = 3;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
};

/// Number of distinct clauses on three distinct variables: 8 * C(n, 3).
inline std::uint64_t uniform_clause_capacity(std::uint32_t n) {
  if (n < 3) return 0;
  std::uint64_t c = std::uint64_t{n} * (n - 1) * (n - 2) / 6;
  return 8 * c;
}

/// Uniform random 3SAT: three distinct variables per clause, random signs,
/// repeated clauses redrawn. Identical specs give identical instances.
inline Instance gen_random(const GenSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("gen_random: need at least 3 variables");
  if (spec.m > uniform_clause_capacity(spec.n))
    throw std::invalid_argument("gen_random: " + std::to_string(spec.m) +
                                " clauses exceeds the " +
                                std::to_string(uniform_clause_capacity(spec.n)) +
                                " distinct clauses on " + std::to_string(spec.n) +
                                " variables");
  Rng rng(spec.seed);
  InstanceBuilder b(spec.n);
  while (b.size() < spec.m) {
    std::array<std::uint32_t, 3> vars{};
    for (int i = 0; i < 3; ++i) {
      bool fresh = false;
      while (!fresh) {
        vars[i] = static_cast<std::uint32_t>(uniform_below(rng, spec.n)) + 1;
        fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && vars[j] != vars[i];
      }
    }
    std::array<Literal, 3> lits{};
    for (int i = 0; i < 3; ++i)
      lits[i] = uniform_below(rng, 2) ? Literal::negative(vars[i]) : Literal::positive(vars[i]);
    Clause probe;
    probe.literals = lits;
    if (b.contains(probe.key())) continue;
    b.add(lits);
  }
  return std::move(b).build();
}

inline constexpr std::uint32_t kEnumerateMaxVars = 4;

/// All 3-literal sets over variables 1..n, as ascending literal codes, in
/// lexicographic order.
inline std::vector<std::array<Literal, 3>> literal_triples(std::uint32_t n) {
  std::vector<std::array<Literal, 3>> out;
  const std::uint32_t L = 2 * n;
  for (std::uint32_t a = 0; a < L; ++a)
    for (std::uint32_t b = a + 1; b < L; ++b)
      for (std::uint32_t c = b + 1; c < L; ++c)
        out.push_back({Literal::from_index(a), Literal::from_index(b), Literal::from_index(c)});
  return out;
}

/// Visits every instance whose clauses are distinct 3-literal sets over
/// variables 1..n, for n <= max_n, with at most max_m clauses, exactly once.
/// An instance is emitted with variable_count equal to the highest variable
/// it mentions; the empty instance comes first with variable_count 0.
/// Within one n, instances are ordered by clause count, then
/// lexicographically by clause index. Clauses may be tautological.
template <class Visitor>
void enumerate_small(std::uint32_t max_n, std::uint32_t max_m, Visitor&& visit) {
  if (max_n > kEnumerateMaxVars)
    throw std::invalid_argument("enumerate_small: at most " +
                                std::to_string(kEnumerateMaxVars) + " variables");
  visit(Instance{});
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    const auto triples = literal_triples(n);
    std::vector<bool> uses_top(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i)
      for (Literal l : triples[i]) uses_top[i] = uses_top[i] || l.variable().id == n;

    const std::size_t T = triples.size();
    for (std::uint32_t k = 1; k <= max_m && k <= T; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        bool top = false;
        for (std::size_t i : idx) top = top || uses_top[i];
        if (top) {
          InstanceBuilder b(n);
          for (std::size_t i : idx) b.add(triples[i]);
          visit(std::move(b).build());
        }
        // next k-combination of 0..T-1
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == T - k + (pos - 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
}

inline std::vector<Instance> enumerate_small(std::uint32_t max_n, std::uint32_t max_m) {
  std::vector<Instance> out;
  enumerate_small(max_n, max_m, [&](Instance inst) { out.push_back(std::move(inst)); });
  return out;
}

}  // namespace usat

#endif  // USAT_GENERATE_HPP
