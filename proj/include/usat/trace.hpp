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

#ifndef USAT_TRACE_HPP
#define USAT_TRACE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "usat/cnf.hpp"
#include "usat/literal.hpp"
#include "usat/understanding.hpp"

namespace usat {

struct TraceEvent {
  std::uint64_t step = 0;
  std::string kind;
  std::optional<Literal> literal;
  std::optional<TruthValue> old_value;
  std::optional<TruthValue> new_value;
  std::optional<ClauseId> clause;
  std::uint64_t counter = 0;

  /// One JSON object, keys in fixed order, no trailing newline.
  std::string to_json() const {
    auto opt_value = [](const std::optional<TruthValue>& v) {
      return v ? "\"" + std::string(to_string(*v)) + "\"" : std::string("null");
    };
    std::string s = "{\"step\":" + std::to_string(step) + ",\"kind\":\"" + kind + "\"";
    s += ",\"literal\":" + (literal ? std::to_string(literal->to_dimacs()) : "null");
    s += ",\"old\":" + opt_value(old_value);
    s += ",\"new\":" + opt_value(new_value);
    s += ",\"clause\":" + (clause ? std::to_string(*clause) : "null");
    s += ",\"counter\":" + std::to_string(counter) + "}";
    return s;
  }

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Append-only event log; recording is a no-op while disabled.
class Trace {
 public:
  explicit Trace(bool enabled = false) : enabled_(enabled) {}

  bool enabled() const { return enabled_; }
  void set_enabled(bool on) { enabled_ = on; }

  void record(std::string_view kind, std::optional<Literal> lit, std::uint64_t counter,
              std::optional<ClauseId> clause = std::nullopt,
              std::optional<TruthValue> old_value = std::nullopt,
              std::optional<TruthValue> new_value = std::nullopt) {
    if (!enabled_) return;
    events_.push_back(TraceEvent{events_.size(), std::string(kind), lit, old_value,
                                 new_value, clause, counter});
  }

  const std::vector<TraceEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  void write_jsonl(std::ostream& os) const {
    for (const TraceEvent& e : events_) os << e.to_json() << '\n';
  }

 private:
  bool enabled_;
  std::vector<TraceEvent> events_;
};

class EngineState;

/// Optional callbacks for test instrumentation.
struct SolveObserver {
  /// After each clause has been fully admitted.
  std::function<void(const EngineState&)> on_admitted;
  /// On entry to algorithm G, with the state and literal it was given.
  std::function<void(const EngineState&, Literal)> on_algorithm_g;
};

/// Run-level accounting shared by every fork of a state.
struct RunContext {
  std::uint64_t ops = 0;          // reevaluate_literal calls
  std::uint64_t guard_trips = 0;  // algorithm D depth-guard hits
  std::uint64_t d_postcheck_failures = 0;  // algorithm D post-check failures
  std::uint64_t diverged = 0;     // fixpoint runs cut by the change budget
  Trace trace;
  SolveObserver observer;
};

}  // namespace usat

#endif  // USAT_TRACE_HPP
