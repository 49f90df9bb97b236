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

// Library usage: solve a DIMACS file, check the verdict against the DPLL
// oracle and print the final understanding of every literal.

#include <iostream>

#include "usat/usat.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: usat_sample <file.cnf>\n";
    return 1;
  }
  usat::Instance inst = usat::read_dimacs_file(argv[1]);
  usat::SolverOutcome out = usat::solve(inst);
  usat::OracleVerdict truth = usat::dpll(inst);

  std::cout << "solver: " << usat::to_string(out.kind) << " after " << out.ops
            << " reevaluations\n";
  std::cout << "oracle: " << (truth.sat ? "SAT" : "UNSAT") << '\n';
  if (out.is_sat()) {
    for (std::uint32_t v = 1; v <= inst.variable_count; ++v) {
      auto x = usat::Literal::positive(v);
      std::cout << "  " << x.to_string() << " = " << usat::to_string(out.understanding[x])
                << '\n';
    }
  }
  return 0;
}
