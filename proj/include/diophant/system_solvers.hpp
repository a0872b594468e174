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

#ifndef DIOPHANT_SYSTEM_SOLVERS_H_
#define DIOPHANT_SYSTEM_SOLVERS_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diophant/model.hpp"

namespace diophant {

// Marker: preprocessing removed every equation, so every integer vector in
// Z^n solves the system.
struct TriviallyAll {};

using PreprocessResult = std::variant<LinearSystem, TriviallyAll, NoSolution>;

// Cleanup pass shared by the system solvers:
//   - a row 0 = b with b != 0 refuses with a witness naming the row;
//   - every other row is divided by the gcd of its coefficients, refusing
//     when that gcd does not divide the right-hand side;
//   - identity rows 0 = 0 and exact duplicates of earlier rows are dropped.
// Variable names are preserved; only rows change.
PreprocessResult preprocess(const LinearSystem& sys);

enum class Feasibility { Guaranteed, Unknown, Infeasible };

// The column subset backing a feasibility verdict: delta is the minor
// determinant on cols, col_deltas[h] the determinant with column cols[h]
// replaced by b.
struct MinorEvidence {
  std::vector<int> cols;
  Integer delta;
  IntVector col_deltas;
};

struct FeasibilityVerdict {
  Feasibility status = Feasibility::Unknown;
  std::optional<MinorEvidence> evidence;
  std::string note;
};

// One-directional integer-feasibility screen for full-row-rank systems
// (throws std::invalid_argument otherwise). Homogeneous systems are always
// Guaranteed. Otherwise scans m-column subsets in lexicographic order for the
// first nonzero minor determinant delta; when delta divides every column
// determinant the system is Guaranteed integer-solvable. A failed division is
// decisive only for square systems (the unique rational solution is not
// integral): those report Infeasible; rectangular systems stay Unknown, since
// another subset might qualify. With exhaustive set, all nonzero minors are
// tried before giving up.
FeasibilityVerdict feasibility_cramer(const LinearSystem& sys, bool exhaustive = false);

// Inner single-equation engine used by the substitution solver.
enum class InnerEquationSolver { GcdDescent, Congruence };

// Solves the equations one at a time in input order: the first equation's
// parametric solution is substituted into the rest, and so on; the chain of
// substitutions composes into the final lattice. Any inner refusal refuses
// the system, with the equation's index prepended to the witness.
SolveResult solve_sys_substitution(const LinearSystem& sys,
                                   InnerEquationSolver inner = InnerEquationSolver::Congruence);

// Congruence-style elimination on the whole system: after cleanup, extract
// any variable with a unit coefficient; otherwise pick the pair of
// coefficients within a row whose division residue is smallest and rewrite
// one variable against the other, solving the row outright once the residue
// reaches a unit.
SolveResult solve_sys_elim(const LinearSystem& sys);

// Rational elimination first: main variables are expressed over the free
// ones, each fractional expression is split into an integer part plus a
// proper fraction that is equated to a fresh integer variable, and the
// resulting integer side equations are eliminated congruence-style.
SolveResult solve_sys_fraction(const LinearSystem& sys);

// Elimination driven by the globally smallest coefficient: a unit pivot
// solves its equation outright; otherwise the pivot row is floor-decomposed
// and the pivot variable rewritten, shrinking the smallest coefficient each
// round.
SolveResult solve_sys_modpivot(const LinearSystem& sys);

// The rational front-end of solve_sys_fraction combined with the
// floor-decomposition elimination of solve_sys_modpivot on the integer side
// equations.
SolveResult solve_sys_hybrid(const LinearSystem& sys);

}  // namespace diophant

#endif  // DIOPHANT_SYSTEM_SOLVERS_H_
