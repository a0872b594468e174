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

#include "diophant/textio.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace diophant {
namespace {

struct Token {
  enum Kind { kPlus, kMinus, kStar, kEquals, kNumber, kIdent, kEnd } kind;
  std::string text;
  SourceSpan span;
};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_tail(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

std::vector<Token> lex_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const SourceSpan span{line_no, static_cast<int>(i) + 1};
    if (c == '+') {
      out.push_back({Token::kPlus, "+", span});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::kMinus, "-", span});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::kStar, "*", span});
      ++i;
    } else if (c == '=') {
      out.push_back({Token::kEquals, "=", span});
      ++i;
    } else if (is_digit(c)) {
      size_t j = i;
      while (j < line.size() && is_digit(line[j])) ++j;
      out.push_back({Token::kNumber, line.substr(i, j - i), span});
      i = j;
    } else if (is_letter(c)) {
      size_t j = i;
      while (j < line.size() && is_ident_tail(line[j])) ++j;
      out.push_back({Token::kIdent, line.substr(i, j - i), span});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", span);
    }
  }
  out.push_back({Token::kEnd, "", {line_no, static_cast<int>(line.size()) + 1}});
  return out;
}

// One equation accumulated over the global variable registry.
struct Row {
  std::map<int, Integer> coeff;
  Integer b = 0;
};

class SystemParser {
 public:
  LinearSystem parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      parse_equation(lex_line(line, line_no));
    }
    if (rows_.empty()) throw ParseError("empty input: no equations found", {1, 1});
    if (vars_.empty()) throw ParseError("the system mentions no variables", {1, 1});
    LinearSystem sys;
    sys.vars = vars_;
    const int n = static_cast<int>(vars_.size());
    for (const Row& row : rows_) {
      IntVector a(n);
      for (const auto& [idx, c] : row.coeff) a[idx] = c;
      sys.a.push_back(std::move(a));
      sys.b.push_back(row.b);
    }
    return sys;
  }

 private:
  int var_index(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(vars_.size());
    vars_.push_back(name);
    index_.emplace(name, idx);
    return idx;
  }

  void parse_equation(const std::vector<Token>& toks) {
    Row row;
    size_t pos = 0;
    parse_side(toks, pos, /*left=*/true, row);
    if (toks[pos].kind != Token::kEquals) {
      throw ParseError("equation has no '='", toks[pos].span);
    }
    ++pos;
    parse_side(toks, pos, /*left=*/false, row);
    if (toks[pos].kind != Token::kEnd) {
      throw ParseError("unexpected '" + toks[pos].text + "' after the right-hand side",
                       toks[pos].span);
    }
    rows_.push_back(std::move(row));
  }

  // side = term { ('+'|'-') term }, first term's sign optional.
  void parse_side(const std::vector<Token>& toks, size_t& pos, bool left, Row& row) {
    bool first = true;
    while (true) {
      const Token& tok = toks[pos];
      if (tok.kind == Token::kEnd || tok.kind == Token::kEquals) {
        if (first) throw ParseError("expected a term", tok.span);
        return;
      }
      int sign = 1;
      if (tok.kind == Token::kPlus || tok.kind == Token::kMinus) {
        sign = tok.kind == Token::kMinus ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", tok.span);
      }
      parse_term(toks, pos, left, sign, row);
      first = false;
    }
  }

  void parse_term(const std::vector<Token>& toks, size_t& pos, bool left, int sign, Row& row) {
    const Token& tok = toks[pos];
    if (tok.kind == Token::kNumber) {
      Integer value(tok.text);
      ++pos;
      if (toks[pos].kind == Token::kStar) {
        ++pos;
        if (toks[pos].kind != Token::kIdent) {
          throw ParseError("expected a variable after '*'", toks[pos].span);
        }
      }
      if (toks[pos].kind == Token::kIdent) {
        add_var(row, toks[pos].text, sign * value, left);
        ++pos;
        return;
      }
      // Bare integer: contributes to the constant side.
      row.b += (left ? -sign : sign) * value;
      return;
    }
    if (tok.kind == Token::kIdent) {
      add_var(row, tok.text, Integer(sign), left);
      ++pos;
      return;
    }
    throw ParseError("expected a term", tok.span);
  }

  void add_var(Row& row, const std::string& name, const Integer& c, bool left) {
    const int idx = var_index(name);
    row.coeff[idx] += left ? c : -c;
  }

  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  std::vector<Row> rows_;
};

std::string int_str(const Integer& v) { return v.str(); }

std::string render_human(const GeneralSolution& gs, const SolverTrace* trace) {
  std::ostringstream os;
  const int p = gs.num_params();
  for (int i = 0; i < gs.num_vars(); ++i) {
    os << gs.vars[i] << " =";
    bool any = false;
    for (int j = 0; j < p; ++j) {
      const Integer& c = gs.c[i][j];
      if (c == 0) continue;
      const Integer a = abs(c);
      if (!any) {
        os << " " << (c < 0 ? "-" : "");
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (a != 1) os << a.str();
      os << "k" << j + 1;
      any = true;
    }
    const Integer& d = gs.d[i];
    if (!any) {
      os << " " << d.str();
    } else if (d != 0) {
      os << (d < 0 ? " - " : " + ") << Integer(abs(d)).str();
    }
    os << "\n";
  }
  if (trace) {
    os << "iterations = " << trace->iterations << "\n";
    os << "substitutions = " << trace->substitutions << "\n";
    os << "peak_coeff = " << trace->peak_coeff.str() << "\n";
  }
  return os.str();
}

std::string render_human(const NoSolution& no, const SolverTrace* trace) {
  std::ostringstream os;
  os << "no solution: " << no.reason << "\n";
  for (const auto& [key, value] : no.witness) {
    os << "  " << key << " = " << value.str() << "\n";
  }
  if (trace) {
    os << "iterations = " << trace->iterations << "\n";
    os << "substitutions = " << trace->substitutions << "\n";
    os << "peak_coeff = " << trace->peak_coeff.str() << "\n";
  }
  return os.str();
}

std::string render_machine(const SolveOutcome& outcome, const SolverTrace* trace) {
  nlohmann::ordered_json doc;
  if (const auto* gs = std::get_if<GeneralSolution>(&outcome)) {
    doc["status"] = "solution";
    doc["vars"] = gs->vars;
    doc["p"] = gs->num_params();
    std::vector<std::string> c_flat;
    c_flat.reserve(static_cast<size_t>(gs->num_vars()) * gs->num_params());
    for (int i = 0; i < gs->num_vars(); ++i) {
      for (int j = 0; j < gs->num_params(); ++j) c_flat.push_back(int_str(gs->c[i][j]));
    }
    doc["C"] = c_flat;
    std::vector<std::string> d_str;
    d_str.reserve(gs->d.size());
    for (const Integer& v : gs->d) d_str.push_back(int_str(v));
    doc["d"] = d_str;
  } else {
    const auto& no = std::get<NoSolution>(outcome);
    doc["status"] = "no_solution";
    doc["reason"] = no.reason;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    for (const auto& [key, value] : no.witness) witness[key] = int_str(value);
    doc["witness"] = witness;
  }
  if (trace) {
    nlohmann::ordered_json t;
    t["iterations"] = trace->iterations;
    t["substitutions"] = trace->substitutions;
    t["peak_coeff"] = trace->peak_coeff.str();
    doc["trace"] = t;
  }
  return doc.dump(2) + "\n";
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(message + " (line " + std::to_string(span.line) + ", column " +
                         std::to_string(span.column) + ")"),
      span_(span) {}

LinearSystem parse_system(const std::string& text) { return SystemParser().parse(text); }

std::string render(const SolveOutcome& outcome, RenderFormat format, const SolverTrace* trace) {
  if (format == RenderFormat::Machine) return render_machine(outcome, trace);
  if (const auto* gs = std::get_if<GeneralSolution>(&outcome)) return render_human(*gs, trace);
  return render_human(std::get<NoSolution>(outcome), trace);
}

std::string render_system(const LinearSystem& sys) {
  std::ostringstream os;
  for (int e = 0; e < sys.num_equations(); ++e) {
    for (int j = 0; j < sys.num_vars(); ++j) {
      const Integer& c = sys.a[e][j];
      if (j == 0) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      os << Integer(abs(c)).str() << "*" << sys.vars[j];
    }
    os << " = " << sys.b[e].str() << "\n";
  }
  return os.str();
}

SolveOutcome parse_machine(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid machine document: ") + e.what(), {1, 1});
  }
  try {
    const std::string status = doc.at("status").get<std::string>();
    if (status == "solution") {
      auto vars = doc.at("vars").get<std::vector<std::string>>();
      const int p = doc.at("p").get<int>();
      const auto c_flat = doc.at("C").get<std::vector<std::string>>();
      const auto d_str = doc.at("d").get<std::vector<std::string>>();
      const size_t n = vars.size();
      if (p < 0 || c_flat.size() != n * static_cast<size_t>(p) || d_str.size() != n) {
        throw ParseError("machine document has inconsistent dimensions", {1, 1});
      }
      IntMatrix c(n, IntVector(p));
      for (size_t i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) c[i][j] = Integer(c_flat[i * p + j]);
      }
      IntVector d(n);
      for (size_t i = 0; i < n; ++i) d[i] = Integer(d_str[i]);
      return GeneralSolution(std::move(vars), std::move(c), std::move(d));
    }
    if (status == "no_solution") {
      NoSolution no{doc.at("reason").get<std::string>(), {}};
      if (doc.contains("witness")) {
        for (const auto& [key, value] : doc.at("witness").items()) {
          no.witness.emplace_back(key, Integer(value.get<std::string>()));
        }
      }
      return no;
    }
    throw ParseError("unknown status '" + status + "'", {1, 1});
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid machine document: ") + e.what(), {1, 1});
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("invalid machine document: ") + e.what(), {1, 1});
  } catch (const std::invalid_argument& e) {
    // Lattice validation: dependent columns, malformed shapes.
    throw ParseError(std::string("invalid machine document: ") + e.what(), {1, 1});
  }
}

}  // namespace diophant
