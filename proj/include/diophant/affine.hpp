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

#ifndef DIOPHANT_AFFINE_H_
#define DIOPHANT_AFFINE_H_

#include <map>
#include <utility>

namespace diophant {

// Sparse affine form sum(coeff_v * var_v) + constant over integer variable
// ids. The term map never stores zero coefficients. This is the working
// representation for the eager-substitution solvers: binding a variable to a
// form rewrites every live form at once, so equations and accumulated
// variable values always refer to currently active variables only.
template <typename Coeff>
struct AffineForm {
  std::map<int, Coeff> terms;
  Coeff constant{};

  Coeff coeff(int v) const {
    auto it = terms.find(v);
    return it == terms.end() ? Coeff{} : it->second;
  }

  void set(int v, Coeff c) {
    if (c == 0) {
      terms.erase(v);
    } else {
      terms[v] = std::move(c);
    }
  }

  void add_term(int v, const Coeff& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(v, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  void add_scaled(const AffineForm& other, const Coeff& s) {
    if (s == 0) return;
    for (const auto& [v, c] : other.terms) add_term(v, c * s);
    constant += other.constant * s;
  }

  // Replaces variable v by repl, which must not mention v itself.
  template <typename C2>
  void substitute_var(int v, const AffineForm<C2>& repl) {
    auto it = terms.find(v);
    if (it == terms.end()) return;
    Coeff c = it->second;
    terms.erase(it);
    for (const auto& [w, cw] : repl.terms) add_term(w, c * static_cast<Coeff>(cw));
    constant += c * static_cast<Coeff>(repl.constant);
  }

  bool constant_only() const { return terms.empty(); }

  bool operator==(const AffineForm& other) const {
    return constant == other.constant && terms == other.terms;
  }
};

}  // namespace diophant

#endif  // DIOPHANT_AFFINE_H_
