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

#ifndef DIOPHANT_SOLVER_STATE_H_
#define DIOPHANT_SOLVER_STATE_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "diophant/affine.hpp"
#include "diophant/model.hpp"

namespace diophant {
namespace internal {

// Guard against a descent that fails to make progress; honest runs terminate
// orders of magnitude below this.
inline constexpr int kMaxRounds = 100000;

// Eager-substitution state shared by the descent solvers. Original variables
// have ids 0..n-1; auxiliaries mint fresh ids upward. Binding an active
// variable to a form over other actives substitutes it immediately in every
// accumulated value and live equation, so all state stays expressed over the
// current active set. The actives left at the end are the lattice parameters,
// ordered by id (original variables first, then auxiliaries by creation).
struct EagerState {
  int n = 0;
  std::vector<AffineForm<Integer>> values;
  std::vector<AffineForm<Integer>> eqs;  // each form means expr == 0
  // Untouched-by-normalization copies of the starting equations, kept under
  // the same substitutions as eqs. Every shadow must stay inside the rational
  // row span of eqs (solved shadows vanish), which cross-checks each round.
  std::vector<AffineForm<Integer>> shadow;
  std::set<int> active;
  int next_aux = 0;
  SolverTrace trace;

  EagerState() = default;

  explicit EagerState(const LinearSystem& sys) : n(sys.num_vars()), next_aux(n) {
    values.resize(n);
    for (int i = 0; i < n; ++i) {
      values[i].set(i, 1);
      active.insert(i);
    }
    for (int e = 0; e < sys.num_equations(); ++e) {
      AffineForm<Integer> f;
      for (int j = 0; j < n; ++j) f.set(j, sys.a[e][j]);
      f.constant = -sys.b[e];
      eqs.push_back(std::move(f));
    }
    note_peak();
  }

  int mint() {
    const int id = next_aux++;
    active.insert(id);
    return id;
  }

  void bind(int v, const AffineForm<Integer>& e) {
    if (active.count(v) == 0) throw std::logic_error("bind: variable not active");
    if (e.terms.count(v) != 0) throw std::logic_error("bind: form mentions the bound variable");
    for (auto& value : values) value.substitute_var(v, e);
    for (auto& eq : eqs) eq.substitute_var(v, e);
    for (auto& row : shadow) row.substitute_var(v, e);
    active.erase(v);
    ++trace.substitutions;
  }

  void note_peak() {
    for (const auto& eq : eqs) {
      for (const auto& [v, c] : eq.terms) {
        if (abs(c) > trace.peak_coeff) trace.peak_coeff = abs(c);
      }
      if (abs(eq.constant) > trace.peak_coeff) trace.peak_coeff = abs(eq.constant);
    }
  }

  GeneralSolution extract(const std::vector<std::string>& vars) const {
    const std::vector<int> params(active.begin(), active.end());
    IntMatrix c(n, IntVector(params.size()));
    IntVector d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = values[i].constant;
      for (size_t j = 0; j < params.size(); ++j) c[i][j] = values[i].coeff(params[j]);
    }
    return GeneralSolution(vars, std::move(c), std::move(d));
  }
};

// Divides each equation by the gcd of its variable coefficients, drops 0 == 0
// identities, and reports a divisibility or zero-row refusal. With dedupe,
// exact duplicates are also removed. Forms mean expr == 0, so the equation
// right-hand side is -constant.
std::optional<NoSolution> normalize_equations(std::vector<AffineForm<Integer>>& eqs, bool dedupe);

// True when every shadow row lies in the rational row span of eqs, constants
// included. Normalization, substitution, and equation removal must all keep
// the shadows inside the span; a violation means a reduction step lost or
// corrupted a constraint.
bool shadows_in_span(const std::vector<AffineForm<Integer>>& eqs,
                     const std::vector<AffineForm<Integer>>& shadow);

}  // namespace internal
}  // namespace diophant

#endif  // DIOPHANT_SOLVER_STATE_H_
