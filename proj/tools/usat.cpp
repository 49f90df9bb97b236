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

// usat: solve, oracle, fuzz, enumerate, minimize and bench.
//
// Exit codes: 10 satisfiable, 20 unsatisfiable, 30 anomaly, 1 usage or input
// error, 0 for harness subcommands that complete.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "usat/harness.hpp"
#include "usat/usat.hpp"

namespace fs = std::filesystem;
using namespace usat;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitAnomaly = 30;
constexpr int kExitUsage = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool quiet = false;
  bool verbose = false;
};

void note(const Common& c, const std::string& msg) {
  if (c.verbose) std::cerr << "usat: " << msg << '\n';
}

std::uint64_t seed_or_env(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("UNDERSTANDING_SAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("UNDERSTANDING_SAT_SEED is not an unsigned integer: " + std::string(env));
    }
  }
  return flag_seed;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::string model_line(const Assignment& a, std::uint32_t n) {
  std::string line = "v";
  for (int lit : model_literals(a, n)) line += " " + std::to_string(lit);
  return line + " 0";
}

/// "N" or "A..B".
std::pair<std::uint32_t, std::uint32_t> parse_var_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto n = static_cast<std::uint32_t>(std::stoul(text));
      return {n, n};
    }
    return {static_cast<std::uint32_t>(std::stoul(text.substr(0, dots))),
            static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("--vars expects N or A..B, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string order = "input";
  int default_free = 0;
  std::string trace;
  std::uint32_t depth_guard_factor = 2;
};

int run_solve(const SolveArgs& args, const Common& common) {
  Instance inst = read_dimacs_file(args.file);
  SolveConfig cfg;
  cfg.order = SolveConfig::parse_order(args.order, cfg.order_seed);
  cfg.default_free = args.default_free != 0;
  cfg.trace = !args.trace.empty();
  cfg.depth_guard_factor = args.depth_guard_factor;

  SolverOutcome out = solve(inst, cfg);
  if (!args.trace.empty()) {
    std::ostringstream os;
    out.run->trace.write_jsonl(os);
    write_file(args.trace, os.str());
  }
  note(common, "ops " + std::to_string(out.ops));

  switch (out.kind) {
    case OutcomeKind::kSat:
      if (!common.quiet)
        std::cout << "s SATISFIABLE\n" << model_line(out.assignment, inst.variable_count) << '\n';
      return kExitSat;
    case OutcomeKind::kUnsat:
      if (!common.quiet) std::cout << "s UNSATISFIABLE\n";
      note(common, "failing clause " + std::to_string(out.failing_clause));
      return kExitUnsat;
    case OutcomeKind::kAnomaly:
      if (!common.quiet) std::cout << "s UNKNOWN\n";
      if (!common.quiet)
        std::cerr << "usat: anomaly " << to_string(out.anomaly) << ": " << out.detail << '\n';
      return kExitAnomaly;
  }
  return kExitAnomaly;
}

struct OracleArgs {
  std::string file;
  std::string method = "auto";
};

int run_oracle_cmd(const OracleArgs& args, const Common& common) {
  Instance inst = read_dimacs_file(args.file);
  OracleMethod method = args.method == "brute"  ? OracleMethod::kBrute
                        : args.method == "dpll" ? OracleMethod::kDpll
                                                : oracle_method_for(inst);
  if (method == OracleMethod::kBrute && inst.variable_count > kBruteForceMaxVars)
    throw UsageError("brute force is limited to " + std::to_string(kBruteForceMaxVars) +
                     " variables");
  OracleVerdict v = run_oracle(inst, method);
  note(common, std::string(to_string(v.method)) + " nodes " + std::to_string(v.nodes));
  if (!common.quiet) {
    std::cout << (v.sat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
    if (v.sat) std::cout << model_line(v.model, inst.variable_count) << '\n';
  }
  return v.sat ? kExitSat : kExitUnsat;
}

// Report, summary and counterexample files share the stem of `out`.
void write_report(const DiffReport& report, const fs::path& out, const Common& common) {
  write_file(out, report.jsonl());
  fs::path summary = out;
  summary.replace_extension(".summary.csv");
  write_file(summary, report.summary_csv());
  for (std::size_t k = 0; k < report.counterexamples.size(); ++k) {
    fs::path cex = out;
    cex.replace_extension(".cex-" + std::to_string(k) + ".json");
    write_file(cex, report.counterexamples[k].to_json().dump(2) + "\n");
  }
  note(common, "wrote " + out.string() + ", " + summary.string() + " and " +
                   std::to_string(report.counterexamples.size()) + " counterexample files");
  if (!common.quiet) std::cout << report.summary_csv();
}

struct HarnessArgs {
  std::string order = "input";
  bool no_minimize = false;
  std::string out;
};

DiffOptions diff_options(const HarnessArgs& h) {
  DiffOptions opts;
  opts.config.order = SolveConfig::parse_order(h.order, opts.config.order_seed);
  opts.minimize = !h.no_minimize;
  return opts;
}

struct FuzzArgs {
  HarnessArgs h;
  std::string vars = "5..12";
  std::vector<double> ratios{2.0, 4.27, 6.0};
  std::size_t count = 100;
  std::uint64_t seed = 0;
};

int run_fuzz(const FuzzArgs& args, const Common& common) {
  FuzzSpec spec;
  std::tie(spec.n_lo, spec.n_hi) = parse_var_range(args.vars);
  if (spec.n_lo < 3 || spec.n_hi < spec.n_lo) throw UsageError("--vars needs 3 <= A <= B");
  spec.ratios = args.ratios;
  spec.count = args.count;
  spec.seed = seed_or_env(args.seed);
  note(common, "fuzz seed " + std::to_string(spec.seed));
  write_report(fuzz(spec, diff_options(args.h)), args.h.out, common);
  return 0;
}

struct EnumerateArgs {
  HarnessArgs h;
  std::uint32_t max_vars = 3;
  std::uint32_t max_clauses = 4;
};

int run_enumerate(const EnumerateArgs& args, const Common& common) {
  if (args.max_vars > kEnumerateMaxVars)
    throw UsageError("--max-vars is limited to " + std::to_string(kEnumerateMaxVars));
  DiffRunner runner(diff_options(args.h));
  enumerate_small(args.max_vars, args.max_clauses, [&](const Instance& inst) { runner.add(inst); });
  write_report(runner.report(), args.h.out, common);
  return 0;
}

struct MinimizeArgs {
  std::string in;
  std::string out;
};

int run_minimize(const MinimizeArgs& args, const Common& common) {
  std::ifstream in(args.in);
  if (!in) throw UsageError("cannot read " + args.in);
  CounterexampleRecord rec;
  try {
    rec = CounterexampleRecord::from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw UsageError(args.in + ": " + e.what());
  }
  if (!replays(rec)) throw UsageError(args.in + ": record does not replay to its mismatch");
  CounterexampleRecord small = minimize(rec);
  note(common, std::to_string(rec.instance.clauses.size()) + " -> " +
                   std::to_string(small.instance.clauses.size()) + " clauses");
  write_file(args.out, small.to_json().dump(2) + "\n");
  if (!common.quiet) std::cout << emit_dimacs(small.instance);
  return 0;
}

struct BenchArgs {
  std::vector<std::uint32_t> sizes{20, 40, 80, 160};
  double ratio = 4.0;
  std::uint64_t seed = 0;
  std::uint32_t per_size = 5;
  std::string out;
};

int run_bench_cmd(const BenchArgs& args, const Common& common) {
  BenchSpec spec;
  spec.sizes = args.sizes;
  spec.ratio = args.ratio;
  spec.seed = seed_or_env(args.seed);
  spec.per_size = args.per_size;
  auto samples = run_bench(spec);
  write_file(args.out, bench_csv(samples));

  Json report;
  report["samples"] = samples.size();
  try {
    ComplexityFit fit = fit_complexity(samples);
    report["exponent"] = fit.exponent;
    report["r_squared"] = fit.r_squared;
    report["used"] = fit.used;
  } catch (const std::invalid_argument& e) {
    report["exponent"] = nullptr;
    report["r_squared"] = nullptr;
    report["error"] = e.what();
  }
  if (!common.quiet) std::cout << report.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"understanding-based 3SAT procedure with a differential test harness", "usat"};
  app.require_subcommand(1);
  Common common;
  auto* quiet = app.add_flag("-q,--quiet", common.quiet, "no result lines on stdout");
  auto* verbose = app.add_flag("-v,--verbose", common.verbose, "progress notes on stderr");
  quiet->excludes(verbose);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "decide a DIMACS 3SAT instance");
  solve_cmd->add_option("file", solve_args.file, "instance")->required();
  solve_cmd->add_option("--order", solve_args.order, "input or perm:<seed>");
  solve_cmd->add_option("--default-free", solve_args.default_free, "value for free variables")
      ->check(CLI::IsMember({0, 1}));
  solve_cmd->add_option("--trace", solve_args.trace, "write JSON-lines trace here");
  solve_cmd->add_option("--depth-guard-factor", solve_args.depth_guard_factor)
      ->check(CLI::PositiveNumber);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "decide an instance with brute force or DPLL");
  oracle_cmd->add_option("file", oracle_args.file, "instance")->required();
  oracle_cmd->add_option("--method", oracle_args.method)
      ->check(CLI::IsMember({"auto", "brute", "dpll"}));

  auto add_harness = [](CLI::App* cmd, HarnessArgs& h) {
    cmd->add_option("--out", h.out, "JSON-lines report")->required();
    cmd->add_option("--order", h.order, "input or perm:<seed>");
    cmd->add_flag("--no-minimize", h.no_minimize, "keep counterexamples as found");
  };

  FuzzArgs fuzz_args;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "random instances against the oracle");
  add_harness(fuzz_cmd, fuzz_args.h);
  fuzz_cmd->add_option("--vars", fuzz_args.vars, "N or A..B");
  fuzz_cmd->add_option("--ratio", fuzz_args.ratios, "clause/variable ratios")->delimiter(',');
  fuzz_cmd->add_option("--count", fuzz_args.count);
  fuzz_cmd->add_option("--seed", fuzz_args.seed);

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "every small instance against the oracle");
  add_harness(enum_cmd, enum_args.h);
  enum_cmd->add_option("--max-vars", enum_args.max_vars);
  enum_cmd->add_option("--max-clauses", enum_args.max_clauses);

  MinimizeArgs min_args;
  auto* min_cmd = app.add_subcommand("minimize", "shrink a counterexample record");
  min_cmd->add_option("--in", min_args.in)->required();
  min_cmd->add_option("--out", min_args.out)->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "operation counts over growing instances");
  bench_cmd->add_option("--sizes", bench_args.sizes)->delimiter(',');
  bench_cmd->add_option("--ratio", bench_args.ratio)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--per-size", bench_args.per_size)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_args.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usat: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, common);
    if (*oracle_cmd) return run_oracle_cmd(oracle_args, common);
    if (*fuzz_cmd) return run_fuzz(fuzz_args, common);
    if (*enum_cmd) return run_enumerate(enum_args, common);
    if (*min_cmd) return run_minimize(min_args, common);
    if (*bench_cmd) return run_bench_cmd(bench_args, common);
  } catch (const FormatError& e) {
    std::cerr << "usat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "usat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
