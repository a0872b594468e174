// Copyright 2026 The diophant Authors
//
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

#ifndef DIOPHANT_BENCH_H_
#define DIOPHANT_BENCH_H_

#include <string>
#include <vector>

#include "diophant/model.hpp"

namespace diophant {

// Reproducible head-to-head of the two single-equation solvers on random
// solvable equations. For a fixed seed the instance stream, and therefore the
// CSV, is byte-identical across runs and platforms.
struct BenchConfig {
  unsigned long long seed = 1;
  int trials = 100;
  int max_n = 4;      // variables drawn from [2, max_n]
  int max_coeff = 30; // coefficients drawn from [-max_coeff, max_coeff]
};

// One benchmark instance: round counts and peak coefficient magnitudes for
// the gcd-descent solver (e1 columns) and the congruence solver (e2 columns).
struct BenchRow {
  int instance_id = 0;  // 1-based
  int n = 0;
  int e1_iterations = 0;
  int e2_iterations = 0;
  Integer e1_peak_coeff = 0;
  Integer e2_peak_coeff = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Instances where the congruence solver needed no more rounds than the
  // gcd-descent solver.
  int congruence_not_worse = 0;
};

// Runs config.trials random instances. Every instance is solvable by
// construction (the right-hand side is A x* for a random integer point x*),
// so both solvers must return a lattice; a refusal is an internal error.
// Throws std::invalid_argument on a nonsensical configuration.
BenchReport run_bench(const BenchConfig& config);

// Renders rows as CSV with the fixed header
// instance_id,n,e1_iterations,e2_iterations,e1_peak_coeff,e2_peak_coeff
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace diophant

#endif  // DIOPHANT_BENCH_H_
