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

// Shared fixtures: regression instances with independently verified
// reference lattices, and deterministic random-instance generators.

#ifndef DIOPHANT_TESTS_SUPPORT_H_
#define DIOPHANT_TESTS_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diophant/model.hpp"

namespace diophant {
namespace test {

inline LinearSystem make_system(std::vector<std::string> vars, IntMatrix a, IntVector b) {
  LinearSystem sys;
  sys.vars = std::move(vars);
  sys.a = std::move(a);
  sys.b = std::move(b);
  return sys;
}

// 6 x1 - 12 x2 - 8 x3 + 22 x4 = 14. The reference lattice below is verified
// symbolically and by box enumeration in the oracle tests.
inline LinearSystem application_eq() {
  return make_system({"x1", "x2", "x3", "x4"}, {{6, -12, -8, 22}}, {14});
}
inline GeneralSolution application_reference() {
  return GeneralSolution({"x1", "x2", "x3", "x4"},
                         {{2, -5, 4}, {1, 0, 0}, {0, -1, 3}, {0, 1, 0}}, {5, 0, 2, 0});
}

// 17 x - 7 y + 10 z = -12, the congruence solver's regression instance.
inline LinearSystem congruence_eq() {
  return make_system({"x", "y", "z"}, {{17, -7, 10}}, {-12});
}
inline GeneralSolution congruence_reference() {
  return GeneralSolution({"x", "y", "z"}, {{3, -7}, {-17, 43}, {-17, 42}}, {12, -72, -72});
}

// -13 x1 + 3 x2 - 4 x3 = 0 and a candidate lattice that satisfies the
// equation identically yet misses integer solutions: it is sound but not
// general, which only the box enumeration can detect.
inline LinearSystem homogeneous_eq() {
  return make_system({"x1", "x2", "x3"}, {{-13, 3, -4}}, {0});
}
inline GeneralSolution non_general_candidate() {
  return GeneralSolution({"x1", "x2", "x3"}, {{-1, 1}, {5, 3}, {7, -1}}, {0, 0, 0});
}

// Two equations, four unknowns, one reliable reference lattice.
inline LinearSystem sys_2eq_4var() {
  return make_system({"x", "y", "z", "w"}, {{5, -7, -2, 6}, {-4, 6, -3, 11}}, {6, 0});
}
inline GeneralSolution sys_2eq_4var_reference() {
  return GeneralSolution({"x", "y", "z", "w"},
                         {{3, 4}, {1, 0}, {31, 79}, {9, 23}}, {2, 0, 23, 7});
}

// Four equations, four unknowns, with an identity row and a row whose
// coefficient gcd is 3: exercises every cleanup path.
inline LinearSystem sys_4eq_4var_degenerate() {
  return make_system({"x", "y", "z", "w"},
                     {{12, -7, 9, 0}, {0, -5, 8, 10}, {0, 0, 0, 0}, {15, 0, 21, 69}},
                     {12, 0, 0, 3});
}

// Three equations, five unknowns, fractional elimination regression.
inline LinearSystem sys_3eq_5var() {
  return make_system({"x1", "x2", "x3", "x4", "x5"},
                     {{3, 4, 0, 22, -8}, {6, 0, 0, 46, -12}, {0, 4, 3, -1, 9}}, {25, 2, 26});
}
inline GeneralSolution sys_3eq_5var_reference() {
  return GeneralSolution({"x1", "x2", "x3", "x4", "x5"},
                         {{-40, -92}, {3, 3}, {-11, 0}, {6, 12}, {3, 0}}, {27, 4, 8, -4, -2});
}

// Two sparse equations over five unknowns.
inline LinearSystem sys_2eq_5var_sparse() {
  return make_system({"x1", "x2", "x3", "x4", "x5"},
                     {{3, 0, -7, 6, 0}, {4, 3, 0, 6, -5}}, {-2, 19});
}

// Two equations over five unknowns, one homogeneous, with a reference
// lattice.
inline LinearSystem sys_2eq_5var_mixed() {
  return make_system({"x1", "x2", "x3", "x4", "x5"},
                     {{3, 0, 6, 2, 0}, {0, 4, -2, 0, -7}}, {0, -1});
}
inline GeneralSolution sys_2eq_5var_mixed_reference() {
  return GeneralSolution({"x1", "x2", "x3", "x4", "x5"},
                         {{-6, -4, -2}, {-2, 1, 0}, {3, 2, 0}, {0, 0, 3}, {-2, 0, 0}},
                         {2, 1, -1, 0, 1});
}

// Bounded draw by modulo on the raw 64-bit stream; bias is irrelevant for
// test corpora and the stream is platform-stable.
inline int bounded(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % range);
}

// Random system with m in [1,max_m], n in [2,max_n], entries in
// [-max_coeff,max_coeff] and no all-zero row. With force_solvable the
// right-hand side is A x* for a random x* in [-2,2]^n, guaranteeing an
// integer solution inside a small box; otherwise b is drawn freely and the
// instance may be infeasible.
inline LinearSystem random_system(std::mt19937_64& rng, int max_m, int max_n, int max_coeff,
                                  bool force_solvable) {
  const int m = bounded(rng, 1, max_m);
  const int n = bounded(rng, 2, max_n);
  LinearSystem sys;
  sys.vars.resize(n);
  for (int j = 0; j < n; ++j) sys.vars[j] = "x" + std::to_string(j + 1);
  sys.a.assign(m, IntVector(n));
  for (int e = 0; e < m; ++e) {
    bool all_zero = true;
    while (all_zero) {
      for (int j = 0; j < n; ++j) {
        sys.a[e][j] = bounded(rng, -max_coeff, max_coeff);
        if (sys.a[e][j] != 0) all_zero = false;
      }
    }
  }
  sys.b.assign(m, 0);
  if (force_solvable) {
    IntVector point(n);
    for (int j = 0; j < n; ++j) point[j] = bounded(rng, -2, 2);
    for (int e = 0; e < m; ++e) {
      for (int j = 0; j < n; ++j) sys.b[e] += sys.a[e][j] * point[j];
    }
  } else {
    for (int e = 0; e < m; ++e) sys.b[e] = bounded(rng, -20, 20);
  }
  return sys;
}

// Random single equation with n in [1,max_n] variables, coefficients in
// [-max_coeff,max_coeff] (not all zero) and a free right-hand side.
inline LinearSystem random_equation(std::mt19937_64& rng, int max_n, int max_coeff) {
  const int n = bounded(rng, 1, max_n);
  LinearSystem sys;
  sys.vars.resize(n);
  for (int j = 0; j < n; ++j) sys.vars[j] = "x" + std::to_string(j + 1);
  sys.a.assign(1, IntVector(n));
  bool all_zero = true;
  while (all_zero) {
    for (int j = 0; j < n; ++j) {
      sys.a[0][j] = bounded(rng, -max_coeff, max_coeff);
      if (sys.a[0][j] != 0) all_zero = false;
    }
  }
  sys.b = {Integer(bounded(rng, -50, 50))};
  return sys;
}

}  // namespace test
}  // namespace diophant

#endif  // DIOPHANT_TESTS_SUPPORT_H_
