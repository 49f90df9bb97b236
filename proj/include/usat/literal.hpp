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

#ifndef USAT_LITERAL_HPP
#define USAT_LITERAL_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace usat {

/// 1-based Boolean variable index.
struct Variable {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Variable, Variable) = default;
};

enum class Polarity : std::uint8_t { positive, negative };

/// A variable together with a polarity.
///
/// Literals are packed as `2 * (id - 1) + negative`, so the code of a literal
/// doubles as a dense index into per-literal tables of size `2 * n`, and
/// negation is a single xor.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, Polarity p)
      : code_(2 * (v.id - 1) + (p == Polarity::negative ? 1u : 0u)) {}

  static constexpr Literal positive(std::uint32_t var) {
    return {Variable{var}, Polarity::positive};
  }
  static constexpr Literal negative(std::uint32_t var) {
    return {Variable{var}, Polarity::negative};
  }
  static constexpr Literal from_index(std::uint32_t index) {
    Literal l;
    l.code_ = index;
    return l;
  }
  /// DIMACS integer encoding: `k` is x_k and `-k` is its negation.
  static Literal from_dimacs(int value) {
    if (value == 0) throw std::invalid_argument("literal 0 is not a literal");
    auto var = static_cast<std::uint32_t>(std::abs(value));
    return value > 0 ? positive(var) : negative(var);
  }

  constexpr Variable variable() const { return Variable{code_ / 2 + 1}; }
  constexpr Polarity polarity() const {
    return (code_ & 1u) ? Polarity::negative : Polarity::positive;
  }
  constexpr bool is_negative() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t index() const { return code_; }

  constexpr Literal negate() const { return from_index(code_ ^ 1u); }
  constexpr Literal operator~() const { return negate(); }

  int to_dimacs() const {
    int v = static_cast<int>(variable().id);
    return is_negative() ? -v : v;
  }

  std::string to_string() const { return std::to_string(to_dimacs()); }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

constexpr Literal negate(Literal l) { return l.negate(); }

}  // namespace usat

template <>
struct std::hash<usat::Literal> {
  std::size_t operator()(usat::Literal l) const noexcept {
    return std::hash<std::uint32_t>{}(l.index());
  }
};

#endif  // USAT_LITERAL_HPP
