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

#ifndef DIOPHANT_TEXTIO_H_
#define DIOPHANT_TEXTIO_H_

#include <stdexcept>
#include <string>

#include "diophant/model.hpp"

namespace diophant {

// 1-based position of a token in the input text.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Parses the equation/system input format: one equation per nonempty line,
// lines starting with '#' are comments. Term grammar:
//   term = [sign] [integer ['*']] identifier | [sign] integer
//   identifier = letter (letter | digit | '_')*
// Whitespace between tokens is insignificant. Both sides of '=' may hold
// terms; bare integers contribute to the constant side, variable terms to the
// coefficient side. Variables are ordered by first appearance across the
// whole system; repeated variables within an equation have their coefficients
// summed. Throws ParseError (with a SourceSpan) on syntax errors, equations
// without '=', empty input, and systems that mention no variables.
LinearSystem parse_system(const std::string& text);

enum class RenderFormat { Human, Machine };

// Renders an outcome. Human: one "var = 2k1 - 5k2 + 4" line per variable,
// terms ordered k1..kp then the constant, zero coefficients omitted,
// "var = 0" when the whole row is zero; refusals print the reason and the
// witness pairs. Machine: a single JSON document with fields exactly
//   status ("solution" | "no_solution"), vars, p,
//   C (row-major flat array of decimal strings, length n*p),
//   d (array of n decimal strings),
//   reason, witness (object of decimal strings) for refusals.
// All matrix integers are decimal strings so any consumer's number width
// survives. With trace set, the trace fields (iterations, substitutions,
// peak_coeff) are appended in both formats.
std::string render(const SolveOutcome& outcome, RenderFormat format,
                   const SolverTrace* trace = nullptr);

// Renders a system in the input format accepted by parse_system, densely
// (every variable appears in every equation, zero coefficients included) so
// parsing it back reproduces the system exactly.
std::string render_system(const LinearSystem& sys);

// Parses a machine-format document back into an outcome. Throws ParseError
// on any invalid document: bad JSON, missing or mistyped fields, inconsistent
// dimensions, or a solution whose lattice fails its own validation.
SolveOutcome parse_machine(const std::string& text);

}  // namespace diophant

#endif  // DIOPHANT_TEXTIO_H_
