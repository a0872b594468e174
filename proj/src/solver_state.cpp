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

#include "solver_state.hpp"

#include <algorithm>

#include "diophant/arith.hpp"

namespace diophant {
namespace internal {

std::optional<NoSolution> normalize_equations(std::vector<AffineForm<Integer>>& eqs, bool dedupe) {
  std::vector<AffineForm<Integer>> kept;
  kept.reserve(eqs.size());
  for (auto& eq : eqs) {
    if (eq.terms.empty()) {
      if (eq.constant != 0) {
        return NoSolution{"equation with all-zero coefficients has nonzero right-hand side", {}};
      }
      continue;  // 0 == 0
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(eq.terms.size());
    for (const auto& [v, c] : eq.terms) coeffs.push_back(c);
    const Integer g = gcd_many(coeffs);
    if (g > 1) {
      if (eq.constant % g != 0) {
        NoSolution no{"coefficient gcd does not divide the right-hand side", {}};
        no.witness.emplace_back("gcd", g);
        no.witness.emplace_back("b", -eq.constant);
        return no;
      }
      for (auto& [v, c] : eq.terms) c /= g;
      eq.constant /= g;
    }
    if (dedupe &&
        std::any_of(kept.begin(), kept.end(), [&](const AffineForm<Integer>& k) { return k == eq; })) {
      continue;
    }
    kept.push_back(std::move(eq));
  }
  eqs = std::move(kept);
  return std::nullopt;
}

bool shadows_in_span(const std::vector<AffineForm<Integer>>& eqs,
                     const std::vector<AffineForm<Integer>>& shadow) {
  std::set<int> ids;
  for (const auto& f : eqs) {
    for (const auto& [v, c] : f.terms) ids.insert(v);
  }
  for (const auto& f : shadow) {
    for (const auto& [v, c] : f.terms) ids.insert(v);
  }
  std::vector<int> cols(ids.begin(), ids.end());
  const auto to_row = [&](const AffineForm<Integer>& f) {
    IntVector row(cols.size() + 1);
    for (size_t j = 0; j < cols.size(); ++j) row[j] = f.coeff(cols[j]);
    row[cols.size()] = f.constant;
    return row;
  };
  IntMatrix m;
  m.reserve(eqs.size() + shadow.size());
  for (const auto& f : eqs) m.push_back(to_row(f));
  const int base = m.empty() ? 0 : rational_rank(m);
  for (const auto& f : shadow) m.push_back(to_row(f));
  if (m.empty()) return true;
  return rational_rank(m) == base;
}

}  // namespace internal
}  // namespace diophant
