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

#include "diophant/arith.hpp"

#include <stdexcept>

namespace diophant {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

Integer gcd_many(const std::vector<Integer>& xs) {
  if (xs.empty()) throw std::invalid_argument("gcd_many: empty input");
  Integer g = 0;
  for (const Integer& x : xs) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

std::pair<Integer, Integer> div_floor(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("div_floor: zero modulus");
  Integer r = a % m;  // truncating remainder, sign follows a
  if (r < 0) r += abs(m);
  Integer q = (a - r) / m;  // exact by construction
  return {q, r};
}

std::optional<Integer> least_abs_residue(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("least_abs_residue: zero modulus");
  Integer r = div_floor(a, m).second;
  if (r == 0) return std::nullopt;
  // Fold 0 < r < |m| into (-|m|/2, |m|/2]; the half-way tie keeps the
  // positive representative.
  Integer mm = abs(m);
  if (2 * r > mm) r -= mm;
  return r;
}

}  // namespace diophant
