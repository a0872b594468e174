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

#include "diophant/system_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "diophant/affine.hpp"
#include "diophant/arith.hpp"
#include "diophant/equation_solvers.hpp"
#include "diophant/oracle.hpp"
#include "solver_state.hpp"

namespace diophant {
namespace {

using internal::EagerState;
using internal::kMaxRounds;
using internal::normalize_equations;
using internal::shadows_in_span;

SolveResult finish_system(const LinearSystem& sys, const EagerState& st) {
  GeneralSolution gs = st.extract(sys.vars);
  if (!verify_symbolic(sys, gs)) {
    throw std::logic_error("internal error: solution failed symbolic re-verification");
  }
  return {std::move(gs), st.trace};
}

void check_span(const EagerState& st) {
  if (!shadows_in_span(st.eqs, st.shadow)) {
    throw std::logic_error("internal error: a reduction round lost a constraint");
  }
}

// Solves equation eq for its unit-coefficient variable v (|coeff| = 1) and
// binds it. The equation becomes an identity and is dropped by the next
// normalization pass.
void extract_unit(EagerState& st, const AffineForm<Integer>& eq, int v) {
  const Integer c = eq.coeff(v);
  AffineForm<Integer> form;
  form.constant = -c * eq.constant;
  for (const auto& [w, cw] : eq.terms) {
    if (w != v) form.set(w, -c * cw);
  }
  st.bind(v, form);
}

// Unit extraction plus smallest-cross-residue substitution, run until no
// equations remain. Returns a refusal when a round proves infeasibility.
std::optional<NoSolution> eliminate_by_residue(EagerState& st) {
  for (int round = 0;; ++round) {
    if (auto refusal = normalize_equations(st.eqs, /*dedupe=*/true)) return refusal;
    if (st.eqs.empty()) return std::nullopt;
    if (round >= kMaxRounds) {
      throw std::logic_error("internal error: elimination failed to terminate");
    }
    check_span(st);
    ++st.trace.iterations;

    // Any unit coefficient solves its equation outright.
    bool extracted = false;
    for (const auto& eq : st.eqs) {
      for (const auto& [v, c] : eq.terms) {
        if (abs(c) == 1) {
          extract_unit(st, eq, v);
          extracted = true;
          break;
        }
      }
      if (extracted) break;
    }
    if (extracted) {
      st.note_peak();
      continue;
    }

    // Smallest least-absolute residue over ordered coefficient pairs within a
    // row; the scan order (row, then both variable ids ascending) makes the
    // first minimum the deterministic choice. Exact-division pairs are
    // skipped: if every pair of a row divided evenly, the smallest
    // coefficient would divide the whole row and normalization would have
    // left a unit.
    int be = -1, bj1 = -1, bj2 = -1;
    Integer br = 0;
    for (size_t e = 0; e < st.eqs.size(); ++e) {
      for (const auto& [j1, c1] : st.eqs[e].terms) {
        for (const auto& [j2, c2] : st.eqs[e].terms) {
          if (j1 == j2) continue;
          const auto r = least_abs_residue(c1, c2);
          if (!r) continue;
          if (be < 0 || abs(*r) < abs(br)) {
            be = static_cast<int>(e);
            bj1 = j1;
            bj2 = j2;
            br = *r;
          }
        }
      }
    }
    if (be < 0) throw std::logic_error("internal error: no reducible coefficient pair");

    const Integer a1 = st.eqs[be].coeff(bj1);
    const Integer a2 = st.eqs[be].coeff(bj2);
    const Integer m = (a1 - br) / a2;
    AffineForm<Integer> form;  // x_{j2} = t - m x_{j1}
    form.set(st.mint(), 1);
    form.set(bj1, -m);
    st.bind(bj2, form);
    // The chosen row now carries coefficient br on x_{j1}; a unit residue
    // lets the row be solved immediately.
    if (abs(br) == 1) extract_unit(st, st.eqs[be], bj1);
    st.note_peak();
  }
}

// Globally-smallest-pivot elimination: a unit pivot solves its equation,
// anything larger floor-decomposes its row, strictly shrinking the smallest
// coefficient in the system.
std::optional<NoSolution> eliminate_by_minpivot(EagerState& st) {
  for (int round = 0;; ++round) {
    if (auto refusal = normalize_equations(st.eqs, /*dedupe=*/true)) return refusal;
    if (st.eqs.empty()) return std::nullopt;
    if (round >= kMaxRounds) {
      throw std::logic_error("internal error: elimination failed to terminate");
    }
    check_span(st);
    ++st.trace.iterations;

    size_t pe = 0;
    int pv = -1;
    Integer pc = 0;
    for (size_t e = 0; e < st.eqs.size(); ++e) {
      for (const auto& [v, c] : st.eqs[e].terms) {
        if (pv < 0 || abs(c) < abs(pc)) {
          pe = e;
          pv = v;
          pc = c;
        }
      }
    }

    if (abs(pc) == 1) {
      extract_unit(st, st.eqs[pe], pv);
      st.note_peak();
      continue;
    }

    // Row: pc x_pv + sum cw x_w + k == 0 with b = -k. Writing cw = pc q_w + r_w
    // and b = pc q_b + r_b (floor division leaves 0 <= r < |pc|) turns
    // x_pv = -sum q_w x_w + q_b + t into the remainder row
    // sum r_w x_w + pc t = r_b, whose nonzero coefficients are all below |pc|.
    const AffineForm<Integer> row = st.eqs[pe];
    AffineForm<Integer> form;
    for (const auto& [w, cw] : row.terms) {
      if (w == pv) continue;
      const Integer q = div_floor(cw, pc).first;
      form.set(w, -q);
    }
    form.constant = div_floor(-row.constant, pc).first;
    form.set(st.mint(), 1);
    st.bind(pv, form);
    st.note_peak();
  }
}

// Rational elimination plus fraction splitting, shared by the fraction-based
// solvers. Main variables whose rational expression is non-integral get the
// expression split into an integer part plus a proper fraction; the fraction
// is equated to a fresh integer variable, contributing one integer side
// equation to solve.
std::variant<EagerState, NoSolution> fraction_front_end(const LinearSystem& sys) {
  const ReduceReport report = reduce_with_residual(sys);
  if (!report.form) {
    NoSolution no{"system has no rational solutions", {}};
    no.witness.emplace_back("residual_num", numerator(report.residual));
    no.witness.emplace_back("residual_den", denominator(report.residual));
    return no;
  }
  const RationalReducedForm& rf = *report.form;

  EagerState st;
  st.n = sys.num_vars();
  st.next_aux = st.n;
  st.values.resize(st.n);
  for (int j : rf.free_cols) {
    st.values[j].set(j, 1);
    st.active.insert(j);
  }

  for (size_t i = 0; i < rf.pivot_cols.size(); ++i) {
    const RationalAffine& expr = rf.exprs[i];
    Integer delta = denominator(expr.constant);
    for (const Rational& c : expr.coeffs) delta = lcm(delta, denominator(c));

    // Least-absolute split of each coefficient against delta: c = q + r/delta
    // with |r| <= delta/2 (ties positive).
    AffineForm<Integer> whole;
    AffineForm<Integer> frac;
    const auto split = [&delta](const Rational& c) {
      const Rational scaled = c * Rational(delta);
      if (denominator(scaled) != 1) {
        throw std::logic_error("internal error: denominator lcm failed to clear a fraction");
      }
      const Integer s = numerator(scaled);
      const auto r = least_abs_residue(s, delta);
      const Integer rem = r ? *r : Integer(0);
      return std::pair<Integer, Integer>((s - rem) / delta, rem);
    };
    for (size_t j = 0; j < expr.coeffs.size(); ++j) {
      const auto [q, r] = split(expr.coeffs[j]);
      if (q != 0) whole.set(rf.free_cols[j], q);
      if (r != 0) frac.set(rf.free_cols[j], r);
    }
    const auto [q0, r0] = split(expr.constant);
    whole.constant = q0;
    frac.constant = r0;

    st.values[rf.pivot_cols[i]] = whole;
    if (!frac.terms.empty() || frac.constant != 0) {
      const int y = st.mint();
      st.values[rf.pivot_cols[i]].set(y, 1);
      frac.add_term(y, -delta);  // fraction = y, cleared: sum r_j x_j - delta y + r_0 = 0
      st.eqs.push_back(std::move(frac));
    }
  }
  st.shadow = st.eqs;
  st.note_peak();
  return st;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const size_t rows = a.size();
  const size_t inner = b.size();
  const size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(rows, IntVector(cols));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      const Integer& aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

MinorEvidence make_evidence(const LinearSystem& sys, const std::vector<int>& cols,
                            const Integer& delta) {
  const int m = sys.num_equations();
  MinorEvidence ev;
  ev.cols = cols;
  ev.delta = delta;
  for (int h = 0; h < m; ++h) {
    IntMatrix sub(m, IntVector(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) sub[i][j] = (j == h) ? sys.b[i] : sys.a[i][cols[j]];
    }
    ev.col_deltas.push_back(determinant(std::move(sub)));
  }
  return ev;
}

}  // namespace

PreprocessResult preprocess(const LinearSystem& sys) {
  validate(sys);
  IntMatrix rows;
  IntVector rhs;
  for (int e = 0; e < sys.num_equations(); ++e) {
    IntVector row = sys.a[e];
    Integer b = sys.b[e];
    if (std::all_of(row.begin(), row.end(), [](const Integer& c) { return c == 0; })) {
      if (b != 0) {
        NoSolution no{"equation with all-zero coefficients has nonzero right-hand side", {}};
        no.witness.emplace_back("row", e);
        no.witness.emplace_back("b", b);
        return no;
      }
      continue;  // 0 == 0
    }
    const Integer g = gcd_many(row);
    if (g > 1) {
      if (b % g != 0) {
        NoSolution no{"coefficient gcd does not divide the right-hand side", {}};
        no.witness.emplace_back("row", e);
        no.witness.emplace_back("gcd", g);
        no.witness.emplace_back("b", b);
        return no;
      }
      for (Integer& c : row) c /= g;
      b /= g;
    }
    bool duplicate = false;
    for (size_t k = 0; k < rows.size() && !duplicate; ++k) {
      duplicate = rows[k] == row && rhs[k] == b;
    }
    if (duplicate) continue;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
  if (rows.empty()) return TriviallyAll{};
  return LinearSystem{sys.vars, std::move(rows), std::move(rhs)};
}

FeasibilityVerdict feasibility_cramer(const LinearSystem& sys, bool exhaustive) {
  validate(sys);
  const int m = sys.num_equations();
  const int n = sys.num_vars();
  if (rational_rank(sys.a) != m) {
    throw std::invalid_argument(
        "feasibility_cramer requires rank(A) equal to the number of equations");
  }
  if (std::all_of(sys.b.begin(), sys.b.end(), [](const Integer& b) { return b == 0; })) {
    return {Feasibility::Guaranteed, std::nullopt,
            "homogeneous system; the zero vector is a solution"};
  }

  std::vector<int> cols(m);
  std::iota(cols.begin(), cols.end(), 0);
  const auto next_subset = [&]() {
    int i = m - 1;
    while (i >= 0 && cols[i] == n - m + i) --i;
    if (i < 0) return false;
    ++cols[i];
    for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
    return true;
  };

  std::optional<MinorEvidence> first_nonzero;
  do {
    IntMatrix sub(m, IntVector(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) sub[i][j] = sys.a[i][cols[j]];
    }
    const Integer delta = determinant(std::move(sub));
    if (delta == 0) continue;
    MinorEvidence ev = make_evidence(sys, cols, delta);
    const bool divides_all =
        std::all_of(ev.col_deltas.begin(), ev.col_deltas.end(),
                    [&delta](const Integer& d) { return d % delta == 0; });
    if (divides_all) {
      return {Feasibility::Guaranteed, std::move(ev),
              "the minor determinant divides every column determinant"};
    }
    if (!first_nonzero) first_nonzero = std::move(ev);
    if (!exhaustive) break;
  } while (next_subset());

  if (!first_nonzero) {
    throw std::logic_error("internal error: full row rank but no nonzero minor");
  }
  if (n == m) {
    // The lone minor is the full matrix: the unique rational solution has a
    // non-integer coordinate, so the failure is decisive.
    return {Feasibility::Infeasible, std::move(first_nonzero),
            "the unique rational solution has a non-integer coordinate"};
  }
  return {Feasibility::Unknown, std::move(first_nonzero),
          "a nonzero minor fails the divisibility test; the criterion is one-directional"};
}

SolveResult solve_sys_substitution(const LinearSystem& sys, InnerEquationSolver inner) {
  validate(sys);
  const int n = sys.num_vars();
  SolverTrace trace;

  // Accumulated lattice x = C k + d over the parameters introduced so far,
  // starting from the identity. Each equation is rewritten over the current
  // parameters, solved on its own, and the parametric solution composed in.
  IntMatrix c_acc(n, IntVector(n));
  for (int i = 0; i < n; ++i) c_acc[i][i] = 1;
  IntVector d_acc(n);

  for (int e = 0; e < sys.num_equations(); ++e) {
    const int q = static_cast<int>(c_acc[0].size());
    IntVector arow(q);
    for (int j = 0; j < q; ++j) {
      Integer s = 0;
      for (int i = 0; i < n; ++i) s += sys.a[e][i] * c_acc[i][j];
      arow[j] = std::move(s);
    }
    Integer brow = sys.b[e];
    for (int i = 0; i < n; ++i) brow -= sys.a[e][i] * d_acc[i];

    if (std::all_of(arow.begin(), arow.end(), [](const Integer& c) { return c == 0; })) {
      if (brow != 0) {
        NoSolution no{"equation is inconsistent with the ones before it", {}};
        no.witness.emplace_back("row", e);
        no.witness.emplace_back("b", brow);
        return {std::move(no), trace};
      }
      continue;  // redundant under the accumulated solution
    }

    LinearSystem one;
    one.vars.reserve(q);
    for (int j = 0; j < q; ++j) one.vars.push_back("p" + std::to_string(j + 1));
    one.a.push_back(std::move(arow));
    one.b.push_back(std::move(brow));
    SolveResult r =
        inner == InnerEquationSolver::GcdDescent ? solve_eq_gcd(one) : solve_eq_congruence(one);
    trace.iterations += r.trace.iterations;
    trace.substitutions += r.trace.substitutions;
    if (r.trace.peak_coeff > trace.peak_coeff) trace.peak_coeff = r.trace.peak_coeff;

    if (auto* no = std::get_if<NoSolution>(&r.outcome)) {
      no->witness.emplace(no->witness.begin(), "row", e);
      return {std::move(*no), trace};
    }
    const GeneralSolution& gs = std::get<GeneralSolution>(r.outcome);
    // Old parameters relate to new ones by k_old = C2 k_new + d2, so
    // x = C k_old + d = (C C2) k_new + (C d2 + d).
    const IntVector shift = mat_vec(c_acc, gs.d);
    for (int i = 0; i < n; ++i) d_acc[i] += shift[i];
    c_acc = mat_mul(c_acc, gs.c);
  }

  GeneralSolution gs(sys.vars, std::move(c_acc), std::move(d_acc));
  if (!verify_symbolic(sys, gs)) {
    throw std::logic_error("internal error: solution failed symbolic re-verification");
  }
  return {std::move(gs), trace};
}

SolveResult solve_sys_elim(const LinearSystem& sys) {
  validate(sys);
  EagerState st(sys);
  st.shadow = st.eqs;
  if (auto refusal = eliminate_by_residue(st)) return {std::move(*refusal), st.trace};
  return finish_system(sys, st);
}

SolveResult solve_sys_fraction(const LinearSystem& sys) {
  validate(sys);
  auto front = fraction_front_end(sys);
  if (auto* no = std::get_if<NoSolution>(&front)) return {std::move(*no), SolverTrace{}};
  EagerState st = std::move(std::get<EagerState>(front));
  if (auto refusal = eliminate_by_residue(st)) return {std::move(*refusal), st.trace};
  return finish_system(sys, st);
}

SolveResult solve_sys_modpivot(const LinearSystem& sys) {
  validate(sys);
  EagerState st(sys);
  st.shadow = st.eqs;
  if (auto refusal = eliminate_by_minpivot(st)) return {std::move(*refusal), st.trace};
  return finish_system(sys, st);
}

SolveResult solve_sys_hybrid(const LinearSystem& sys) {
  validate(sys);
  auto front = fraction_front_end(sys);
  if (auto* no = std::get_if<NoSolution>(&front)) return {std::move(*no), SolverTrace{}};
  EagerState st = std::move(std::get<EagerState>(front));
  if (auto refusal = eliminate_by_minpivot(st)) return {std::move(*refusal), st.trace};
  return finish_system(sys, st);
}

}  // namespace diophant
