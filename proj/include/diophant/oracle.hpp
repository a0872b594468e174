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

#ifndef DIOPHANT_ORACLE_H_
#define DIOPHANT_ORACLE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diophant/model.hpp"

namespace diophant {

// Does A x == b hold exactly?
bool verify_particular(const LinearSystem& sys, const IntVector& x);

// Does the lattice satisfy the system identically in the parameters, i.e.
// A C == 0 and A d == b? Throws std::invalid_argument when the variable lists
// do not match.
bool verify_symbolic(const LinearSystem& sys, const GeneralSolution& gs);

// Unique rational solve of C k = x0 - d (the columns of C are independent):
// returns the integer parameter vector when x0 lies on the lattice, nullopt
// when it is not representable.
std::optional<IntVector> membership(const GeneralSolution& gs, const IntVector& x0);

// Precomputed form of membership() for repeated queries against one lattice.
// Internally a Cramer-style integer solve: an invertible row basis of C, its
// determinant and adjugate.
class LatticeMembership {
 public:
  explicit LatticeMembership(const GeneralSolution& gs);
  std::optional<IntVector> solve(const IntVector& x0) const;

 private:
  IntMatrix c_;
  IntVector d_;
  int p_;
  std::vector<int> basis_rows_;
  IntMatrix adj_;  // adjugate of the basis submatrix
  Integer det_ = 1;
};

// Enumeration refused: the requested box exceeds the candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct EnumerationOptions {
  // Cap on n * (2 box + 1)^n candidate work before the enumerator refuses.
  long long budget = 10'000'000;
};

// All integer solutions of the system inside [-box, box]^n, in lexicographic
// order. Throws BudgetExceeded when the box is too large for the budget.
std::vector<IntVector> brute_particulars(const LinearSystem& sys, int box,
                                         const EnumerationOptions& opts = {});

struct BoxCheck {
  bool general = true;
  IntVector counterexample;  // first box solution off the lattice, if any
};

// Is every box solution of the system representable on the lattice? Requires
// verify_symbolic to hold (throws std::invalid_argument otherwise). On
// failure reports the first counterexample in enumeration order.
BoxCheck is_general_on_box(const LinearSystem& sys, const GeneralSolution& gs, int box,
                           const EnumerationOptions& opts = {});

// Operational lattice equality on a box: both candidates symbolically solve
// the system (throws otherwise), have equal parameter count, and are each
// general on the box.
bool equivalent_on_box(const LinearSystem& sys, const GeneralSolution& lhs,
                       const GeneralSolution& rhs, int box, const EnumerationOptions& opts = {});

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct StructureReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Necessary structural facts about a claimed general solution:
//  - lattice-rank: rank C == p and p == n - rank A;
//  - homogeneous-form (homogeneous systems): d == 0 and every column of C is
//    primitive (gcd 1);
//  - row-gcds (single homogeneous equation, gcd(a) == 1, all coefficients
//    nonzero): the gcd of row i of C equals the gcd of the coefficients with
//    a_i removed.
// These are necessary, not sufficient: a non-general lattice can pass.
StructureReport structure_checks(const LinearSystem& sys, const GeneralSolution& gs);

}  // namespace diophant

#endif  // DIOPHANT_ORACLE_H_
