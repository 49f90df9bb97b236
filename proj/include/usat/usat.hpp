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

#ifndef USAT_USAT_HPP
#define USAT_USAT_HPP

#include "usat/algorithms.hpp"
#include "usat/cnf.hpp"
#include "usat/dimacs.hpp"
#include "usat/engine.hpp"
#include "usat/generate.hpp"
#include "usat/literal.hpp"
#include "usat/oracle.hpp"
#include "usat/random.hpp"
#include "usat/solver.hpp"
#include "usat/trace.hpp"
#include "usat/understanding.hpp"

#endif  // USAT_USAT_HPP
