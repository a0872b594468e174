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

#include "diophant/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace diophant {
namespace {

bool all_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string join_ints(const IntVector& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

}  // namespace

bool verify_particular(const LinearSystem& sys, const IntVector& x) {
  validate(sys);
  if (x.size() != sys.vars.size())
    throw std::invalid_argument("verify_particular: point has wrong length");
  return mat_vec(sys.a, x) == sys.b;
}

bool verify_symbolic(const LinearSystem& sys, const GeneralSolution& gs) {
  validate(sys);
  if (gs.vars != sys.vars)
    throw std::invalid_argument("verify_symbolic: variable lists do not match");
  const int m = sys.num_equations();
  const int n = sys.num_vars();
  const int p = gs.num_params();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      Integer acc = 0;
      for (int v = 0; v < n; ++v) acc += sys.a[i][v] * gs.c[v][j];
      if (acc != 0) return false;
    }
  }
  return mat_vec(sys.a, gs.d) == sys.b;
}

LatticeMembership::LatticeMembership(const GeneralSolution& gs)
    : c_(gs.c), d_(gs.d), p_(gs.num_params()) {
  if (p_ == 0) return;
  basis_rows_ = row_basis_indices(c_);
  if (static_cast<int>(basis_rows_.size()) != p_)
    throw std::invalid_argument("membership: lattice columns are dependent");
  IntMatrix basis(p_, IntVector(p_));
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < p_; ++j) basis[i][j] = c_[basis_rows_[i]][j];
  }
  det_ = determinant(basis);
  // adjugate = det * inverse, recovered exactly from the rational inverse.
  std::vector<std::vector<Rational>> aug(p_, std::vector<Rational>(2 * p_, Rational(0)));
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < p_; ++j) aug[i][j] = Rational(basis[i][j]);
    aug[i][p_ + i] = 1;
  }
  for (int c = 0; c < p_; ++c) {
    int pr = -1;
    for (int i = c; i < p_; ++i) {
      if (aug[i][c] != 0) {
        pr = i;
        break;
      }
    }
    std::swap(aug[c], aug[pr]);
    const Rational piv = aug[c][c];
    for (auto& e : aug[c]) e /= piv;
    for (int i = 0; i < p_; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (int j = 0; j < 2 * p_; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  adj_.assign(p_, IntVector(p_));
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < p_; ++j) {
      const Rational adj_entry = aug[i][p_ + j] * Rational(det_);
      adj_[i][j] = numerator(adj_entry);  // denominator is 1 by construction
    }
  }
}

std::optional<IntVector> LatticeMembership::solve(const IntVector& x0) const {
  if (x0.size() != d_.size())
    throw std::invalid_argument("membership: point has wrong length");
  IntVector y(x0.size());
  for (size_t i = 0; i < y.size(); ++i) y[i] = x0[i] - d_[i];
  if (p_ == 0) {
    if (all_zero(y)) return IntVector{};
    return std::nullopt;
  }
  IntVector k(p_, 0);
  for (int i = 0; i < p_; ++i) {
    Integer acc = 0;
    for (int j = 0; j < p_; ++j) acc += adj_[i][j] * y[basis_rows_[j]];
    if (acc % det_ != 0) return std::nullopt;
    k[i] = acc / det_;
  }
  if (mat_vec(c_, k) != y) return std::nullopt;
  return k;
}

std::optional<IntVector> membership(const GeneralSolution& gs, const IntVector& x0) {
  return LatticeMembership(gs).solve(x0);
}

std::vector<IntVector> brute_particulars(const LinearSystem& sys, int box,
                                         const EnumerationOptions& opts) {
  validate(sys);
  if (box < 0) throw std::invalid_argument("brute_particulars: negative box");
  const int n = sys.num_vars();
  const int m = sys.num_equations();
  Integer work = n;
  const Integer side = 2 * Integer(box) + 1;
  for (int i = 0; i < n; ++i) work *= side;
  if (work > opts.budget) {
    std::ostringstream os;
    os << "enumeration budget exceeded: box " << box << " over " << n << " variables needs "
       << work << " candidate steps, budget is " << opts.budget;
    throw BudgetExceeded(os.str());
  }

  // suffix_bound[j][i] = box * sum of |a[i][l]| for l >= j: the largest swing
  // the undecided variables can still contribute to row i.
  std::vector<IntVector> suffix_bound(n + 1, IntVector(m, 0));
  for (int j = n - 1; j >= 0; --j) {
    for (int i = 0; i < m; ++i) {
      suffix_bound[j][i] = suffix_bound[j + 1][i] + abs(sys.a[i][j]) * box;
    }
  }

  std::vector<IntVector> out;
  IntVector x(n);
  // partial[j] = A[:, 0..j-1] * x[0..j-1]
  std::vector<IntVector> partial(n + 1, IntVector(m, 0));

  // Depth-first lexicographic scan. The last coordinate is solved directly
  // from the row residuals instead of being scanned.
  auto solve_last = [&](int depth) {
    bool constrained = false;
    Integer candidate = 0;
    for (int i = 0; i < m; ++i) {
      const Integer residual = sys.b[i] - partial[depth][i];
      const Integer& coeff = sys.a[i][depth];
      if (coeff == 0) {
        if (residual != 0) return;
        continue;
      }
      if (residual % coeff != 0) return;
      const Integer value = residual / coeff;
      if (constrained) {
        if (value != candidate) return;
      } else {
        candidate = value;
        constrained = true;
      }
    }
    if (constrained) {
      if (abs(candidate) > box) return;
      x[depth] = candidate;
      out.push_back(x);
      return;
    }
    for (Integer v = -box; v <= box; ++v) {
      x[depth] = v;
      out.push_back(x);
    }
  };

  auto step = [&](auto&& self, int depth) -> void {
    if (depth == n - 1) {
      solve_last(depth);
      return;
    }
    IntVector& next = partial[depth + 1];
    for (int i = 0; i < m; ++i) next[i] = partial[depth][i] - sys.a[i][depth] * box;
    for (Integer v = -box; v <= box; ++v) {
      if (v != -box) {
        for (int i = 0; i < m; ++i) next[i] += sys.a[i][depth];
      }
      bool alive = true;
      for (int i = 0; i < m; ++i) {
        if (abs(sys.b[i] - next[i]) > suffix_bound[depth + 1][i]) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      x[depth] = v;
      self(self, depth + 1);
    }
  };
  step(step, 0);
  return out;
}

BoxCheck is_general_on_box(const LinearSystem& sys, const GeneralSolution& gs, int box,
                           const EnumerationOptions& opts) {
  if (!verify_symbolic(sys, gs))
    throw std::invalid_argument("is_general_on_box: candidate fails symbolic verification");
  const LatticeMembership lm(gs);
  for (const IntVector& x0 : brute_particulars(sys, box, opts)) {
    if (!lm.solve(x0)) return {false, x0};
  }
  return {true, {}};
}

bool equivalent_on_box(const LinearSystem& sys, const GeneralSolution& lhs,
                       const GeneralSolution& rhs, int box, const EnumerationOptions& opts) {
  if (!verify_symbolic(sys, lhs) || !verify_symbolic(sys, rhs))
    throw std::invalid_argument("equivalent_on_box: candidate fails symbolic verification");
  if (lhs.num_params() != rhs.num_params()) return false;
  return is_general_on_box(sys, lhs, box, opts).general &&
         is_general_on_box(sys, rhs, box, opts).general;
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.applicable || c.passed; });
}

StructureReport structure_checks(const LinearSystem& sys, const GeneralSolution& gs) {
  if (gs.vars != sys.vars)
    throw std::invalid_argument("structure_checks: variable lists do not match");
  StructureReport report;
  const int n = sys.num_vars();
  const int p = gs.num_params();

  {
    CheckResult check{"lattice-rank", true, false, ""};
    const int rank_a = rational_rank(sys.a);
    const int rank_c = p == 0 ? 0 : rational_rank(gs.c);
    check.passed = rank_c == p && p == n - rank_a;
    std::ostringstream os;
    os << "p=" << p << " rank(C)=" << rank_c << " n-rank(A)=" << n - rank_a;
    check.detail = os.str();
    report.checks.push_back(std::move(check));
  }

  const bool homogeneous = all_zero(sys.b);
  {
    CheckResult check{"homogeneous-form", true, false, ""};
    check.applicable = homogeneous;
    if (homogeneous) {
      check.passed = all_zero(gs.d);
      std::ostringstream os;
      if (!check.passed) os << "offset d is nonzero: " << join_ints(gs.d);
      for (int j = 0; j < p && check.passed; ++j) {
        IntVector col(n);
        for (int i = 0; i < n; ++i) col[i] = gs.c[i][j];
        const Integer g = gcd_many(col);
        if (g != 1) {
          check.passed = false;
          os << "column " << j + 1 << " has gcd " << g;
        }
      }
      check.detail = os.str();
    }
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"row-gcds", true, false, ""};
    const bool single = sys.num_equations() == 1;
    bool nonzero_coeffs = single;
    if (single) {
      for (const Integer& a : sys.a[0]) {
        if (a == 0) nonzero_coeffs = false;
      }
    }
    check.applicable =
        single && homogeneous && nonzero_coeffs && n >= 2 && gcd_many(sys.a[0]) == 1;
    if (check.applicable) {
      check.passed = true;
      std::ostringstream os;
      for (int i = 0; i < n; ++i) {
        IntVector others;
        for (int j = 0; j < n; ++j) {
          if (j != i) others.push_back(sys.a[0][j]);
        }
        const Integer expected = gcd_many(others);
        const Integer actual = p == 0 ? Integer(0) : gcd_many(gs.c[i]);
        if (actual != expected) {
          check.passed = false;
          os << "row " << i + 1 << ": gcd(C row)=" << actual << " expected " << expected << "; ";
        }
      }
      check.detail = os.str();
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace diophant
