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

#ifndef DIOPHANT_ARITH_H_
#define DIOPHANT_ARITH_H_

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diophant {

// Arbitrary-precision signed integer. Every computation in the toolkit is
// exact; nothing here can overflow.
using Integer = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with a positive denominator by the
// backing type.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den exactly. Unlike the Rational{num, den} constructor this
// accepts a negative denominator (the sign moves to the numerator).
// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// gcd of all entries, ignoring signs. The gcd of an all-zero vector is 0.
// Throws std::invalid_argument on empty input.
Integer gcd_many(const std::vector<Integer>& xs);

// Quotient and least non-negative remainder:
//   a == m * q + r  with  0 <= r < |m|.
// Throws std::domain_error when m == 0.
std::pair<Integer, Integer> div_floor(const Integer& a, const Integer& m);

// Remainder of least absolute value:
//   r == a (mod m),  0 < |r| <= |m| / 2,  ties resolved to the positive r.
// Returns nullopt when m divides a (no usable residue exists).
// Throws std::domain_error when m == 0.
std::optional<Integer> least_abs_residue(const Integer& a, const Integer& m);

}  // namespace diophant

#endif  // DIOPHANT_ARITH_H_
