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

#ifndef USAT_HARNESS_HPP
#define USAT_HARNESS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "usat/cnf.hpp"
#include "usat/dimacs.hpp"
#include "usat/generate.hpp"
#include "usat/oracle.hpp"
#include "usat/solver.hpp"

namespace usat {

using Json = nlohmann::ordered_json;

enum class Classification : std::uint8_t {
  kAgreeSat,
  kAgreeUnsat,
  kFalseSat,
  kFalseUnsat,
  kAnomaly,
};
inline constexpr std::size_t kClassificationCount = 5;

enum class MismatchKind : std::uint8_t { kFalseSat, kFalseUnsat, kAnomaly };

constexpr std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kAgreeSat: return "AgreeSat";
    case Classification::kAgreeUnsat: return "AgreeUnsat";
    case Classification::kFalseSat: return "FalseSat";
    case Classification::kFalseUnsat: return "FalseUnsat";
    case Classification::kAnomaly: return "Anomaly";
  }
  return "?";
}

constexpr std::string_view to_string(MismatchKind k) {
  switch (k) {
    case MismatchKind::kFalseSat: return "FalseSat";
    case MismatchKind::kFalseUnsat: return "FalseUnsat";
    case MismatchKind::kAnomaly: return "Anomaly";
  }
  return "?";
}

inline MismatchKind parse_mismatch_kind(std::string_view s) {
  if (s == "FalseSat") return MismatchKind::kFalseSat;
  if (s == "FalseUnsat") return MismatchKind::kFalseUnsat;
  if (s == "Anomaly") return MismatchKind::kAnomaly;
  throw std::invalid_argument("unknown mismatch kind '" + std::string(s) + "'");
}

inline Classification classify(const SolverOutcome& s, const OracleVerdict& o) {
  switch (s.kind) {
    case OutcomeKind::kAnomaly: return Classification::kAnomaly;
    case OutcomeKind::kSat: return o.sat ? Classification::kAgreeSat : Classification::kFalseSat;
    case OutcomeKind::kUnsat:
      return o.sat ? Classification::kFalseUnsat : Classification::kAgreeUnsat;
  }
  return Classification::kAnomaly;
}

inline std::optional<MismatchKind> mismatch_of(Classification c) {
  switch (c) {
    case Classification::kFalseSat: return MismatchKind::kFalseSat;
    case Classification::kFalseUnsat: return MismatchKind::kFalseUnsat;
    case Classification::kAnomaly: return MismatchKind::kAnomaly;
    default: return std::nullopt;
  }
}

/// Brute force up to `brute_limit` variables, DPLL beyond.
inline OracleMethod oracle_method_for(const Instance& inst, std::uint32_t brute_limit = 20) {
  return inst.variable_count <= brute_limit ? OracleMethod::kBrute : OracleMethod::kDpll;
}

using SolverFn = std::function<SolverOutcome(const Instance&, const SolveConfig&)>;

inline SolverFn default_solver() {
  return [](const Instance& inst, const SolveConfig& cfg) { return solve(inst, cfg); };
}

// ---------------------------------------------------------------------------
// JSON forms

inline std::vector<int> model_literals(const Assignment& a, std::uint32_t n) {
  std::vector<int> out;
  for (std::uint32_t v = 1; v <= n; ++v)
    out.push_back(a.value(Variable{v}) ? static_cast<int>(v) : -static_cast<int>(v));
  return out;
}

inline Json config_json(const SolveConfig& cfg) {
  return Json{{"order", cfg.order_string()},
              {"default_free", cfg.default_free ? 1 : 0},
              {"depth_guard_factor", cfg.depth_guard_factor}};
}

inline SolveConfig config_from_json(const Json& j) {
  SolveConfig cfg;
  cfg.order = SolveConfig::parse_order(j.at("order").get<std::string>(), cfg.order_seed);
  cfg.default_free = j.value("default_free", 0) != 0;
  cfg.depth_guard_factor = j.value("depth_guard_factor", 2u);
  return cfg;
}

inline Json outcome_json(const SolverOutcome& o, const Instance& inst) {
  Json j;
  j["result"] = std::string(to_string(o.kind));
  if (o.is_sat()) j["model"] = model_literals(o.assignment, inst.variable_count);
  if (o.is_unsat()) j["failing_clause"] = o.failing_clause;
  if (o.is_anomaly()) {
    j["anomaly"] = std::string(to_string(o.anomaly));
    j["clause"] = o.anomaly_clause ? Json(*o.anomaly_clause) : Json(nullptr);
    if (o.contradiction) {
      j["witness"] = o.contradiction->witness.to_dimacs();
      j["reason"] = std::string(to_string(o.contradiction->reason));
    }
    j["detail"] = o.detail;
    j["trace_ref"] = o.trace_step ? Json(*o.trace_step) : Json(nullptr);
  }
  j["ops"] = o.ops;
  return j;
}

inline Json verdict_json(const OracleVerdict& v, const Instance& inst) {
  Json j;
  j["result"] = v.sat ? "SAT" : "UNSAT";
  j["method"] = std::string(to_string(v.method));
  j["nodes"] = v.nodes;
  if (v.sat) j["model"] = model_literals(v.model, inst.variable_count);
  return j;
}

// ---------------------------------------------------------------------------
// Adjudication and counterexamples

struct Adjudication {
  Classification classification = Classification::kAgreeSat;
  SolverOutcome outcome;
  OracleVerdict verdict;
};

inline Adjudication adjudicate(const Instance& inst, const SolveConfig& cfg,
                               const SolverFn& solver = default_solver(),
                               std::uint32_t brute_limit = 20) {
  Adjudication a;
  a.outcome = solver(inst, cfg);
  a.verdict = run_oracle(inst, oracle_method_for(inst, brute_limit));
  a.classification = classify(a.outcome, a.verdict);
  return a;
}

/// A replayable solver/oracle disagreement.
struct CounterexampleRecord {
  Instance instance;
  SolveConfig config;
  Json solver_outcome;
  Json oracle_verdict;
  MismatchKind kind = MismatchKind::kAnomaly;
  bool minimized = false;

  static CounterexampleRecord from(const Instance& inst, const SolveConfig& cfg,
                                   const Adjudication& a) {
    auto kind = mismatch_of(a.classification);
    if (!kind) throw std::invalid_argument("counterexample from an agreeing run");
    return {inst, cfg, outcome_json(a.outcome, inst), verdict_json(a.verdict, inst), *kind,
            false};
  }

  Json to_json() const {
    Json j;
    j["dimacs"] = emit_dimacs(instance);
    j["config"] = config_json(config);
    j["solver_outcome"] = solver_outcome;
    j["oracle_verdict"] = oracle_verdict;
    j["kind"] = std::string(to_string(kind));
    j["minimized"] = minimized;
    return j;
  }

  static CounterexampleRecord from_json(const Json& j) {
    CounterexampleRecord r;
    r.instance = parse_dimacs(j.at("dimacs").get<std::string>());
    r.config = config_from_json(j.at("config"));
    r.solver_outcome = j.at("solver_outcome");
    r.oracle_verdict = j.at("oracle_verdict");
    r.kind = parse_mismatch_kind(j.at("kind").get<std::string>());
    r.minimized = j.value("minimized", false);
    return r;
  }
};

/// Re-runs the embedded instance; true iff the recorded mismatch recurs.
inline bool replays(const CounterexampleRecord& r, const SolverFn& solver = default_solver()) {
  auto a = adjudicate(r.instance, r.config, solver);
  return mismatch_of(a.classification) == r.kind;
}

/// Greedy clause removal until no single clause can be dropped without
/// losing the mismatch kind. The result is 1-minimal and replays.
inline CounterexampleRecord minimize(const CounterexampleRecord& rec,
                                     const SolverFn& solver = default_solver()) {
  auto same_kind = [&](const Instance& inst) {
    return mismatch_of(adjudicate(inst, rec.config, solver).classification) == rec.kind;
  };
  Instance current = rec.instance;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < current.clauses.size();) {
      std::vector<ClauseId> keep;
      for (ClauseId j = 0; j < current.clauses.size(); ++j)
        if (j != i) keep.push_back(j);
      Instance candidate = sub_instance(current, keep);
      if (same_kind(candidate)) {
        current = std::move(candidate);
        shrunk = true;
      } else {
        ++i;
      }
    }
  }
  auto a = adjudicate(current, rec.config, solver);
  CounterexampleRecord out = rec;
  out.instance = current;
  out.solver_outcome = outcome_json(a.outcome, current);
  out.oracle_verdict = verdict_json(a.verdict, current);
  out.minimized = true;
  return out;
}

// ---------------------------------------------------------------------------
// Differential runs

struct DiffOptions {
  SolveConfig config;
  bool minimize = true;
  std::uint32_t brute_limit = 20;
  std::size_t max_instances = 0;  // 0: no budget
};

struct DiffEntry {
  std::size_t index = 0;
  std::optional<std::uint64_t> seed;
  std::uint32_t n = 0;
  std::size_t m = 0;
  Classification classification = Classification::kAgreeSat;
  Json solver;
  Json oracle;
  std::optional<std::size_t> counterexample;  // index into counterexamples
};

struct DiffReport {
  std::array<std::size_t, kClassificationCount> counts{};
  std::vector<DiffEntry> entries;
  std::vector<CounterexampleRecord> counterexamples;
  std::size_t skipped = 0;  // instances beyond the budget

  std::size_t total() const { return entries.size(); }
  std::size_t count(Classification c) const { return counts[static_cast<std::size_t>(c)]; }

  /// One JSON object per instance, in instance order.
  std::string jsonl() const {
    std::string out;
    for (const DiffEntry& e : entries) {
      Json j;
      j["index"] = e.index;
      j["seed"] = e.seed ? Json(*e.seed) : Json(nullptr);
      j["vars"] = e.n;
      j["clauses"] = e.m;
      j["class"] = std::string(to_string(e.classification));
      j["solver"] = e.solver;
      j["oracle"] = e.oracle;
      j["counterexample"] = e.counterexample ? Json(*e.counterexample) : Json(nullptr);
      out += j.dump();
      out += '\n';
    }
    return out;
  }

  std::string summary_csv() const {
    std::ostringstream os;
    os << "class,count,rate\n";
    for (std::size_t c = 0; c < kClassificationCount; ++c) {
      double rate = total() ? static_cast<double>(counts[c]) / static_cast<double>(total()) : 0.0;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", rate);
      os << to_string(static_cast<Classification>(c)) << ',' << counts[c] << ',' << buf << '\n';
    }
    os << "total," << total() << ",1.000000\n";
    return os.str();
  }
};

/// Accumulates a diff run instance by instance.
class DiffRunner {
 public:
  explicit DiffRunner(DiffOptions opts = {}, SolverFn solver = default_solver())
      : opts_(std::move(opts)), solver_(std::move(solver)) {}

  void add(const Instance& inst, std::optional<std::uint64_t> seed = std::nullopt) {
    if (opts_.max_instances != 0 && report_.entries.size() >= opts_.max_instances) {
      ++report_.skipped;
      return;
    }
    if (oracle_method_for(inst, opts_.brute_limit) == OracleMethod::kBrute &&
        inst.variable_count > kBruteForceMaxVars)
      throw std::invalid_argument("instance outside the oracle limit");
    Adjudication a = adjudicate(inst, opts_.config, solver_, opts_.brute_limit);
    DiffEntry e;
    e.index = report_.entries.size();
    e.seed = seed;
    e.n = inst.variable_count;
    e.m = inst.clauses.size();
    e.classification = a.classification;
    e.solver = outcome_json(a.outcome, inst);
    e.oracle = verdict_json(a.verdict, inst);
    ++report_.counts[static_cast<std::size_t>(a.classification)];
    if (mismatch_of(a.classification)) {
      auto rec = CounterexampleRecord::from(inst, opts_.config, a);
      if (opts_.minimize) rec = minimize(rec, solver_);
      e.counterexample = report_.counterexamples.size();
      report_.counterexamples.push_back(std::move(rec));
    }
    report_.entries.push_back(std::move(e));
  }

  const DiffReport& report() const { return report_; }
  DiffReport take() && { return std::move(report_); }

 private:
  DiffOptions opts_;
  SolverFn solver_;
  DiffReport report_;
};

inline DiffReport diff_run(std::span<const Instance> batch, const DiffOptions& opts = {},
                           const SolverFn& solver = default_solver(),
                           std::span<const std::uint64_t> seeds = {}) {
  DiffRunner runner(opts, solver);
  for (std::size_t i = 0; i < batch.size(); ++i)
    runner.add(batch[i], i < seeds.size() ? std::optional(seeds[i]) : std::nullopt);
  return std::move(runner).take();
}

/// Seeded fuzz batch: instance i takes ratio i mod |ratios| and a variable
/// count cycling through [n_lo, n_hi].
struct FuzzSpec {
  std::uint32_t n_lo = 5;
  std::uint32_t n_hi = 12;
  std::vector<double> ratios{2.0, 4.27, 6.0};
  std::size_t count = 100;
  std::uint64_t seed = 0;

  GenSpec instance_spec(std::size_t i) const {
    if (ratios.empty() || n_lo < 3 || n_hi < n_lo)
      throw std::invalid_argument("fuzz spec needs ratios and 3 <= n_lo <= n_hi");
    GenSpec g;
    g.n = n_lo + static_cast<std::uint32_t>((i / ratios.size()) % (n_hi - n_lo + 1));
    double ratio = ratios[i % ratios.size()];
    auto m = static_cast<std::uint64_t>(std::llround(ratio * g.n));
    g.m = static_cast<std::uint32_t>(std::min(m, uniform_clause_capacity(g.n)));
    g.seed = splitmix64(seed + i);
    return g;
  }
};

inline DiffReport fuzz(const FuzzSpec& spec, const DiffOptions& opts = {},
                       const SolverFn& solver = default_solver()) {
  DiffRunner runner(opts, solver);
  for (std::size_t i = 0; i < spec.count; ++i) {
    GenSpec g = spec.instance_spec(i);
    runner.add(gen_random(g), g.seed);
  }
  return std::move(runner).take();
}

// ---------------------------------------------------------------------------
// Complexity measurement

struct ComplexitySample {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint64_t ops = 0;
  OutcomeKind outcome = OutcomeKind::kSat;
  std::uint64_t seed = 0;
};

struct ComplexityFit {
  double exponent = 0;
  double r_squared = 0;
  std::size_t used = 0;
};

/// Least-squares slope of log(ops) against log(m) over runs that finished
/// with a verdict (anomalies excluded). Needs at least five such samples
/// spanning a 4x range of m.
inline ComplexityFit fit_complexity(std::span<const ComplexitySample> samples) {
  std::vector<std::pair<double, double>> pts;
  double m_min = 0, m_max = 0;
  for (const auto& s : samples) {
    if (s.outcome == OutcomeKind::kAnomaly || s.m == 0) continue;
    double m = s.m;
    if (pts.empty() || m < m_min) m_min = m;
    if (pts.empty() || m > m_max) m_max = m;
    pts.emplace_back(std::log(m), std::log(static_cast<double>(std::max<std::uint64_t>(s.ops, 1))));
  }
  if (pts.size() < 5) throw std::invalid_argument("fit_complexity: need at least 5 samples");
  if (m_max < 4 * m_min)
    throw std::invalid_argument("fit_complexity: samples must span a 4x range of m");

  double n = static_cast<double>(pts.size()), sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  double mx = sx / n, my = sy / n, sxx = 0, sxy = 0, syy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  ComplexityFit fit;
  fit.used = pts.size();
  fit.exponent = sxy / sxx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

struct BenchSpec {
  std::vector<std::uint32_t> sizes{20, 40, 80, 160};
  double ratio = 4.0;
  std::uint64_t seed = 0;
  std::uint32_t per_size = 5;
  SolveConfig config;
};

/// Solves `per_size` random instances at each clause count m, with
/// n = round(m / ratio) variables, recording the operation count.
inline std::vector<ComplexitySample> run_bench(const BenchSpec& spec) {
  std::vector<ComplexitySample> out;
  for (std::uint32_t m : spec.sizes) {
    auto n = static_cast<std::uint32_t>(std::max<long long>(3, std::llround(m / spec.ratio)));
    for (std::uint32_t j = 0; j < spec.per_size; ++j) {
      GenSpec g{n, m, splitmix64(spec.seed ^ (std::uint64_t{m} << 32) ^ j)};
      SolverOutcome o = solve(gen_random(g), spec.config);
      out.push_back({m, n, o.ops, o.kind, g.seed});
    }
  }
  return out;
}

inline std::string bench_csv(std::span<const ComplexitySample> samples) {
  std::string out = "m,n,seed,ops,outcome\n";
  for (const auto& s : samples)
    out += std::to_string(s.m) + "," + std::to_string(s.n) + "," + std::to_string(s.seed) +
           "," + std::to_string(s.ops) + "," + std::string(to_string(s.outcome)) + "\n";
  return out;
}

}  // namespace usat

#endif  // USAT_HARNESS_HPP
