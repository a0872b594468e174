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

#include "diophant/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace diophant {
namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form over the first num_cols columns (any
// further columns ride along as augmentation). Pivot rule: leftmost nonzero
// column, then smallest row index. Returns the (row, col) pivot positions.
std::vector<std::pair<int, int>> rref(RatMatrix& m, int num_cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  for (int c = 0; c < num_cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const Rational piv = m[r][c];
    for (auto& entry : m[r]) entry /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix w(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    w[i].reserve(m[i].size());
    for (const Integer& v : m[i]) w[i].emplace_back(v);
  }
  return w;
}

}  // namespace

void validate(const LinearSystem& sys) {
  if (sys.vars.empty()) throw std::invalid_argument("system has no variables");
  if (sys.a.empty()) throw std::invalid_argument("system has no equations");
  if (sys.b.size() != sys.a.size())
    throw std::invalid_argument("right-hand side length does not match the equation count");
  for (const auto& row : sys.a) {
    if (row.size() != sys.vars.size())
      throw std::invalid_argument("equation row length does not match the variable count");
  }
  std::set<std::string> names(sys.vars.begin(), sys.vars.end());
  if (names.size() != sys.vars.size())
    throw std::invalid_argument("duplicate variable names");
}

GeneralSolution::GeneralSolution(std::vector<std::string> vars_in, IntMatrix c_in, IntVector d_in)
    : vars(std::move(vars_in)), c(std::move(c_in)), d(std::move(d_in)) {
  if (vars.empty()) throw std::invalid_argument("solution has no variables");
  std::set<std::string> names(vars.begin(), vars.end());
  if (names.size() != vars.size()) throw std::invalid_argument("duplicate variable names");
  if (c.size() != vars.size() || d.size() != vars.size())
    throw std::invalid_argument("C and d must have one row per variable");
  const size_t p = c[0].size();
  for (const auto& row : c) {
    if (row.size() != p) throw std::invalid_argument("C is ragged");
  }
  if (p > 0 && rational_rank(c) != static_cast<int>(p))
    throw std::invalid_argument("columns of C are linearly dependent over the rationals");
}

ReduceReport reduce_with_residual(const LinearSystem& sys) {
  validate(sys);
  const int m = sys.num_equations();
  const int n = sys.num_vars();
  RatMatrix w(m);
  for (int i = 0; i < m; ++i) {
    w[i].reserve(n + 1);
    for (const Integer& v : sys.a[i]) w[i].emplace_back(v);
    w[i].emplace_back(sys.b[i]);
  }
  const auto pivots = rref(w, n);
  const int rank = static_cast<int>(pivots.size());
  for (int i = rank; i < m; ++i) {
    if (w[i][n] != 0) return {std::nullopt, w[i][n]};
  }
  RationalReducedForm form;
  form.rank = rank;
  std::vector<bool> is_pivot(n, false);
  for (const auto& [r, c] : pivots) {
    form.pivot_cols.push_back(c);
    is_pivot[c] = true;
  }
  for (int j = 0; j < n; ++j) {
    if (!is_pivot[j]) form.free_cols.push_back(j);
  }
  for (int k = 0; k < rank; ++k) {
    const int r = pivots[k].first;
    RationalAffine e;
    e.constant = w[r][n];
    e.coeffs.reserve(form.free_cols.size());
    for (int j : form.free_cols) e.coeffs.push_back(-w[r][j]);
    form.exprs.push_back(std::move(e));
  }
  return {std::move(form), Rational(0)};
}

std::optional<RationalReducedForm> rank_and_reduce(const LinearSystem& sys) {
  return reduce_with_residual(sys).form;
}

int rational_rank(const IntMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  RatMatrix w = to_rational(m);
  return static_cast<int>(rref(w, static_cast<int>(m[0].size())).size());
}

std::vector<int> row_basis_indices(const IntMatrix& m) {
  if (m.empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  RatMatrix w = to_rational(m);
  std::vector<bool> used(rows, false);
  std::vector<int> basis;
  for (int c = 0; c < cols; ++c) {
    int pr = -1;
    for (int i = 0; i < rows; ++i) {
      if (!used[i] && w[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = true;
    basis.push_back(pr);
    for (int i = 0; i < rows; ++i) {
      if (used[i] || w[i][c] == 0) continue;
      const Rational f = w[i][c] / w[pr][c];
      for (int j = 0; j < cols; ++j) w[i][j] -= f * w[pr][j];
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Integer determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
  }
  // Bareiss fraction-free elimination: every division below is exact.
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
  IntVector out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

IntVector substitute(const GeneralSolution& gs, const IntVector& k) {
  if (static_cast<int>(k.size()) != gs.num_params())
    throw std::invalid_argument("substitute: parameter vector has wrong length");
  IntVector x = gs.d;
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < k.size(); ++j) x[i] += gs.c[i][j] * k[j];
  }
  return x;
}

GeneralSolution compose(const GeneralSolution& hom, const IntVector& particular) {
  for (const Integer& v : hom.d) {
    if (v != 0) throw std::invalid_argument("compose: homogeneous part has nonzero offset");
  }
  if (particular.size() != hom.vars.size())
    throw std::invalid_argument("compose: particular solution has wrong length");
  return GeneralSolution(hom.vars, hom.c, particular);
}

}  // namespace diophant
