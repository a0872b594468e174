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

#include "diophant/equation_solvers.hpp"

#include <stdexcept>
#include <utility>

#include "diophant/arith.hpp"
#include "diophant/oracle.hpp"
#include "solver_state.hpp"

namespace diophant {
namespace {

void require_single_equation(const LinearSystem& sys, const char* who) {
  validate(sys);
  if (sys.num_equations() != 1) {
    throw std::invalid_argument(std::string(who) + " expects exactly one equation");
  }
}

SolveResult finish(const LinearSystem& sys, const internal::EagerState& st) {
  GeneralSolution gs = st.extract(sys.vars);
  if (!verify_symbolic(sys, gs)) {
    throw std::logic_error("internal error: solution failed symbolic re-verification");
  }
  return {std::move(gs), st.trace};
}

}  // namespace

SolveResult solve_eq_gcd(const LinearSystem& sys) {
  require_single_equation(sys, "solve_eq_gcd");
  internal::EagerState st(sys);
  while (true) {
    auto refusal = internal::normalize_equations(st.eqs, /*dedupe=*/false);
    if (refusal) return {std::move(*refusal), st.trace};
    if (st.eqs.empty()) break;
    if (st.trace.iterations >= internal::kMaxRounds) {
      throw std::logic_error("internal error: pivot descent failed to terminate");
    }
    ++st.trace.iterations;
    const AffineForm<Integer> eq = st.eqs[0];

    int h = -1;
    Integer ah;
    for (const auto& [v, c] : eq.terms) {
      if (h < 0 || abs(c) < abs(ah)) {
        h = v;
        ah = c;
      }
    }
    st.trace.descent.push_back(abs(ah));

    if (abs(ah) == 1) {
      // a_h is a unit, so x_h = a_h * (b - sum of the other terms).
      AffineForm<Integer> form;
      form.constant = -ah * eq.constant;
      for (const auto& [v, c] : eq.terms) {
        if (v != h) form.set(v, -ah * c);
      }
      st.bind(h, form);
    } else {
      // Divide every other coefficient and the right-hand side by the pivot
      // (floor convention, remainders in [0, |a_h|)) and fold the quotients
      // into a fresh parameter: x_h = -sum(q_j x_j) + q - t. Substituting
      // leaves the remainders as the new equation, with -a_h on t, and some
      // remainder is nonzero with magnitude below |a_h| because the gcd is 1.
      AffineForm<Integer> form;
      form.constant = div_floor(-eq.constant, ah).first;
      for (const auto& [v, c] : eq.terms) {
        if (v == h) continue;
        form.set(v, -div_floor(c, ah).first);
      }
      form.set(st.mint(), -1);
      st.bind(h, form);
    }
    st.note_peak();
  }
  return finish(sys, st);
}

SolveResult solve_eq_congruence(const LinearSystem& sys) {
  require_single_equation(sys, "solve_eq_congruence");
  internal::EagerState st(sys);
  while (true) {
    auto refusal = internal::normalize_equations(st.eqs, /*dedupe=*/false);
    if (refusal) return {std::move(*refusal), st.trace};
    if (st.eqs.empty()) break;
    if (st.trace.iterations >= internal::kMaxRounds) {
      throw std::logic_error("internal error: residue descent failed to terminate");
    }
    ++st.trace.iterations;
    const AffineForm<Integer> eq = st.eqs[0];

    int u = -1;
    Integer au;
    for (const auto& [v, c] : eq.terms) {
      if (abs(c) == 1) {
        u = v;
        au = c;
        break;
      }
    }
    if (u >= 0) {
      // Unit coefficient: solve for x_u directly.
      st.trace.descent.push_back(1);
      AffineForm<Integer> form;
      form.constant = -au * eq.constant;
      for (const auto& [v, c] : eq.terms) {
        if (v != u) form.set(v, -au * c);
      }
      st.bind(u, form);
      st.note_peak();
      continue;
    }

    // All coefficients have magnitude >= 2 after gcd normalization, so some
    // ordered pair admits a nonzero residue (pairwise mutual divisibility
    // would force a common factor). Pick the least |r|, breaking ties toward
    // smaller variable indices.
    int bi = -1;
    int bj = -1;
    Integer br;
    for (const auto& [i, ci] : eq.terms) {
      for (const auto& [j, cj] : eq.terms) {
        if (i == j) continue;
        const auto r = least_abs_residue(ci, cj);
        if (!r) continue;
        if (bi < 0 || abs(*r) < abs(br) ||
            (abs(*r) == abs(br) && (i < bi || (i == bi && j < bj)))) {
          bi = i;
          bj = j;
          br = *r;
        }
      }
    }
    if (bi < 0) throw std::logic_error("internal error: no reducible coefficient pair");
    st.trace.descent.push_back(abs(br));

    const Integer ai = eq.coeff(bi);
    const Integer aj = eq.coeff(bj);
    const Integer m = (ai - br) / aj;
    if (abs(br) >= 2) {
      // Rewrite x_j = t - m*x_i; the substituted equation carries r on x_i.
      AffineForm<Integer> form;
      form.set(st.mint(), 1);
      form.set(bi, -m);
      st.bind(bj, form);
    } else {
      // r is a unit, so both variables resolve at once over one parameter:
      //   x_i = r*(-a_j*t + B),  x_j = r*(a_i*t - m*B)
      // with B = b - (terms outside the pair). Substituting back yields
      // r^2 * B = B, an identity.
      AffineForm<Integer> big;
      big.constant = -eq.constant;
      for (const auto& [s, cs] : eq.terms) {
        if (s != bi && s != bj) big.set(s, -cs);
      }
      const int t = st.mint();
      AffineForm<Integer> fi;
      fi.set(t, -br * aj);
      fi.add_scaled(big, br);
      AffineForm<Integer> fj;
      fj.set(t, br * ai);
      fj.add_scaled(big, -br * m);
      st.bind(bi, fi);
      st.bind(bj, fj);
    }
    st.note_peak();
  }
  return finish(sys, st);
}

}  // namespace diophant
