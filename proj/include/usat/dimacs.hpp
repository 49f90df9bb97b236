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

#ifndef USAT_DIMACS_HPP
#define USAT_DIMACS_HPP

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "usat/cnf.hpp"

namespace usat {

namespace detail {

inline bool parse_int(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Reads a DIMACS CNF 3SAT instance. Repeated literals inside a clause
/// collapse; repeated clauses are dropped and counted in `dedup_count`.
inline Instance parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<InstanceBuilder> builder;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c" || toks[0].front() == 'c') continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (builder) throw FormatError("duplicate header", lineno);
      long long n = 0, m = 0;
      if (toks.size() != 4 || toks[1] != "cnf" || !detail::parse_int(toks[2], n) ||
          !detail::parse_int(toks[3], m) || n < 0 || m < 0 ||
          n > std::numeric_limits<std::int32_t>::max())
        throw FormatError("malformed header, expected 'p cnf <vars> <clauses>'", lineno);
      builder.emplace(static_cast<std::uint32_t>(n));
      continue;
    }
    if (!builder) throw FormatError("clause before 'p cnf' header", lineno);
    for (auto tok : toks) {
      long long v = 0;
      if (!detail::parse_int(tok, v) || v < std::numeric_limits<int>::min() + 1 ||
          v > std::numeric_limits<int>::max())
        throw FormatError("invalid literal '" + std::string(tok) + "'", lineno);
      if (pending.empty()) pending_line = lineno;
      if (v == 0) {
        if (pending.empty()) throw FormatError("empty clause", lineno);
        builder->add(pending, pending_line);
        pending.clear();
        continue;
      }
      pending.push_back(Literal::from_dimacs(static_cast<int>(v)));
    }
  }
  if (!builder) throw FormatError("missing 'p cnf' header");
  if (!pending.empty()) throw FormatError("clause not terminated by 0", pending_line);
  return std::move(*builder).build();
}

inline Instance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline Instance read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

/// Header line, then one clause per line terminated by `0`. No trailing
/// whitespace on any line.
inline std::string emit_dimacs(const Instance& inst) {
  std::string out = "p cnf " + std::to_string(inst.variable_count) + " " +
                    std::to_string(inst.clauses.size()) + "\n";
  for (const Clause& c : inst.clauses) {
    for (Literal l : c.literals) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace usat

#endif  // USAT_DIMACS_HPP
