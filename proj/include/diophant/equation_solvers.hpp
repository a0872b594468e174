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

#ifndef DIOPHANT_EQUATION_SOLVERS_H_
#define DIOPHANT_EQUATION_SOLVERS_H_

#include "diophant/model.hpp"

namespace diophant {

// Solves a single linear equation a1*x1 + ... + an*xn = b over the integers by
// repeated division at a minimum-magnitude pivot. Each round divides the
// equation by the gcd of its coefficients (refusing when the gcd does not
// divide the right-hand side), picks the coefficient of least magnitude
// (smallest variable index on ties), and either solves outright when that
// coefficient is a unit or rewrites the pivot variable through the floor
// quotients of the other coefficients, introducing one fresh parameter. The
// pivot magnitude strictly decreases, so the loop terminates.
//
// Requires a system with exactly one equation. The returned solution is
// symbolically re-verified against the input before being returned; the trace
// records one descent entry per round (the pivot magnitude).
SolveResult solve_eq_gcd(const LinearSystem& sys);

// Solves a single linear equation over the integers by residue reduction
// between pairs of coefficients. Each round normalizes by the gcd, then either
// solves directly at a unit coefficient or scans ordered coefficient pairs
// (a_i, a_j) for the least-magnitude residue r with a_i = r (mod a_j), breaking
// ties toward smaller variable indices. When |r| >= 2 the round rewrites x_j
// through one fresh parameter so x_i's coefficient drops to r; when |r| = 1 the
// equation collapses to closed forms for both variables at once. The minimum
// residue available strictly shrinks round over round, so the loop terminates.
//
// Requires a system with exactly one equation. The returned solution is
// symbolically re-verified against the input before being returned; the trace
// records one descent entry per round (the residue magnitude, or 1 for a unit
// round).
SolveResult solve_eq_congruence(const LinearSystem& sys);

}  // namespace diophant

#endif  // DIOPHANT_EQUATION_SOLVERS_H_
