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

#ifndef DIOPHANT_MODEL_H_
#define DIOPHANT_MODEL_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diophant/arith.hpp"

namespace diophant {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major, rectangular

// A system of m >= 1 linear equations A x = b over n >= 1 named integer
// unknowns. Plain data; shape is checked by validate().
struct LinearSystem {
  std::vector<std::string> vars;  // size n, names unique
  IntMatrix a;                    // m rows of size n
  IntVector b;                    // size m

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_equations() const { return static_cast<int>(a.size()); }
};

// Throws std::invalid_argument when the system is malformed (no variables,
// no equations, ragged rows, duplicate names, b length mismatch).
void validate(const LinearSystem& sys);

// The general integer solution x = C k + d: an affine lattice over parameter
// vector k of length p. p == 0 encodes a unique solution point. The
// constructor enforces that the columns of C are linearly independent over
// the rationals (rank C == p) and throws std::invalid_argument otherwise.
struct GeneralSolution {
  std::vector<std::string> vars;  // size n
  IntMatrix c;                    // n x p
  IntVector d;                    // size n

  GeneralSolution(std::vector<std::string> vars_in, IntMatrix c_in, IntVector d_in);

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_params() const { return vars.empty() ? 0 : static_cast<int>(c[0].size()); }
};

// Definite refusal: the instance has no integer solutions. The witness holds
// the machine-checkable facts behind the refusal (for a divisibility refusal,
// "gcd" and "b" such that gcd does not divide b).
struct NoSolution {
  std::string reason;
  std::vector<std::pair<std::string, Integer>> witness;
};

using SolveOutcome = std::variant<NoSolution, GeneralSolution>;

// Instrumentation accumulated by a solver run. descent holds the per-round
// pivot or residue magnitude for the single-equation solvers (strictly
// decreasing positive); system solvers leave it empty.
struct SolverTrace {
  int iterations = 0;
  int substitutions = 0;
  Integer peak_coeff = 0;
  std::vector<Integer> descent;
};

struct SolveResult {
  SolveOutcome outcome;
  SolverTrace trace;
};

// One solved main variable as an affine expression over the free variables:
// x_pivot = sum(coeffs[j] * x_free[j]) + constant, exact rationals.
struct RationalAffine {
  std::vector<Rational> coeffs;
  Rational constant;
};

// Result of exact rational Gauss elimination on [A | b]. pivot_cols lists the
// main variables, free_cols the remaining ones (both ascending); exprs[i]
// solves pivot_cols[i] over free_cols. Dependent rows are dropped.
struct RationalReducedForm {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  std::vector<RationalAffine> exprs;
};

// Eliminates A x = b over the rationals. Pivots choose the leftmost nonzero
// column, then the smallest row index. Returns nullopt when the system is
// inconsistent over the rationals.
std::optional<RationalReducedForm> rank_and_reduce(const LinearSystem& sys);

// rank_and_reduce plus the first inconsistent row's constant (the c of the
// reduced row 0 = c) for diagnostics when there is no rational solution.
struct ReduceReport {
  std::optional<RationalReducedForm> form;
  Rational residual;
};
ReduceReport reduce_with_residual(const LinearSystem& sys);

// Rank of an integer matrix over the rationals.
int rational_rank(const IntMatrix& m);

// Ascending indices of a maximal linearly independent set of rows, biased
// toward the earliest rows.
std::vector<int> row_basis_indices(const IntMatrix& m);

// Determinant of a square integer matrix, exact (fraction-free elimination).
Integer determinant(IntMatrix m);

// A x for a rectangular matrix and conforming vector.
IntVector mat_vec(const IntMatrix& m, const IntVector& x);

// Evaluates the lattice at a concrete parameter vector: C k + d.
// Throws std::invalid_argument when k has the wrong length.
IntVector substitute(const GeneralSolution& gs, const IntVector& k);

// Attaches a particular solution to a homogeneous lattice: the solution set
// C k + particular. Requires hom.d == 0 and matching lengths.
GeneralSolution compose(const GeneralSolution& hom, const IntVector& particular);

}  // namespace diophant

#endif  // DIOPHANT_MODEL_H_
