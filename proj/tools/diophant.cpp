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

// Command line front end. Exit codes: 0 success (a solution was produced, all
// verification checks passed, or the enumeration finished), 1 honest negative
// (no solution, a failed check, or an enumeration over budget), 2 usage or
// input error, 3 internal verification failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "diophant/bench.hpp"
#include "diophant/equation_solvers.hpp"
#include "diophant/model.hpp"
#include "diophant/oracle.hpp"
#include "diophant/system_solvers.hpp"
#include "diophant/textio.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// Enumeration budget, overridable through DIOPH_ENUM_BUDGET.
diophant::EnumerationOptions enumeration_options() {
  diophant::EnumerationOptions opts;
  if (const char* env = std::getenv("DIOPH_ENUM_BUDGET")) {
    const std::string text(env);
    long long budget = 0;
    std::size_t used = 0;
    try {
      budget = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || budget <= 0) {
      throw std::runtime_error("DIOPH_ENUM_BUDGET must be a positive integer, got '" + text + "'");
    }
    opts.budget = budget;
  }
  return opts;
}

diophant::SolveResult run_algorithm(const std::string& algorithm,
                                    const diophant::LinearSystem& sys) {
  using namespace diophant;
  if (algorithm == "e1") return solve_eq_gcd(sys);
  if (algorithm == "e2") return solve_eq_congruence(sys);
  if (algorithm == "s1") return solve_sys_substitution(sys);
  if (algorithm == "s2") return solve_sys_elim(sys);
  if (algorithm == "s3") return solve_sys_fraction(sys);
  if (algorithm == "s4") return solve_sys_modpivot(sys);
  if (algorithm == "s5") return solve_sys_hybrid(sys);
  // auto: the congruence solver for a single equation, the hybrid solver
  // for systems.
  if (sys.num_equations() == 1) return solve_eq_congruence(sys);
  return solve_sys_hybrid(sys);
}

int cmd_solve(const std::string& algorithm, const std::string& input,
              const std::string& format, bool with_trace) {
  using namespace diophant;
  const LinearSystem sys = parse_system(read_input(input));
  const SolveResult result = run_algorithm(algorithm, sys);
  const RenderFormat fmt = format == "machine" ? RenderFormat::Machine : RenderFormat::Human;
  const SolverTrace* trace = with_trace ? &result.trace : nullptr;
  if (const auto* gs = std::get_if<GeneralSolution>(&result.outcome)) {
    // The solvers re-verify before returning; check once more so a faulty
    // solver path can never print an unverified lattice.
    if (!verify_symbolic(sys, *gs)) {
      std::cerr << "internal error: solution failed symbolic re-verification\n";
      return kExitInternal;
    }
    std::cout << render(result.outcome, fmt, trace);
    return kExitSuccess;
  }
  std::cout << render(result.outcome, fmt, trace);
  return kExitNegative;
}

int cmd_verify(const std::string& system_path, const std::string& solution_path, int box) {
  using namespace diophant;
  const LinearSystem sys = parse_system(read_input(system_path));
  const SolveOutcome outcome = parse_machine(read_input(solution_path));
  const auto* gs = std::get_if<GeneralSolution>(&outcome);
  if (gs == nullptr) {
    std::cerr << "error: the solution document is a refusal, nothing to verify\n";
    return kExitUsage;
  }

  bool all_ok = true;
  const bool symbolic = verify_symbolic(sys, *gs);
  std::cout << "symbolic: " << (symbolic ? "PASS" : "FAIL") << "\n";
  if (!symbolic) all_ok = false;

  const StructureReport report = structure_checks(sys, *gs);
  for (const CheckResult& check : report.checks) {
    std::cout << check.name << ": ";
    if (!check.applicable) {
      std::cout << "SKIP (not applicable)";
    } else if (check.passed) {
      std::cout << "PASS";
    } else {
      std::cout << "FAIL";
      all_ok = false;
    }
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
  }

  if (symbolic) {
    const BoxCheck box_check = is_general_on_box(sys, *gs, box, enumeration_options());
    std::cout << "generality(box=" << box << "): " << (box_check.general ? "PASS" : "FAIL") << "\n";
    if (!box_check.general) {
      all_ok = false;
      std::cout << "  counterexample:";
      for (const Integer& v : box_check.counterexample) std::cout << " " << v.str();
      std::cout << "\n";
    }
  } else {
    std::cout << "generality(box=" << box << "): SKIP (symbolic check failed)\n";
  }
  return all_ok ? kExitSuccess : kExitNegative;
}

int cmd_bench(const diophant::BenchConfig& config, const std::string& output) {
  using namespace diophant;
  const BenchReport report = run_bench(config);
  const std::string csv = bench_csv(report.rows);
  std::ostream* summary = &std::cerr;
  std::ofstream file;
  if (output.empty()) {
    std::cout << csv;
  } else {
    file.open(output);
    if (!file) throw std::runtime_error("cannot open output file: " + output);
    file << csv;
    summary = &std::cout;
  }
  const int total = static_cast<int>(report.rows.size());
  *summary << "congruence rounds <= gcd-descent rounds on " << report.congruence_not_worse
           << " of " << total << " instances";
  if (total > 0) {
    const double fraction = static_cast<double>(report.congruence_not_worse) / total;
    *summary << " (fraction " << std::fixed << std::setprecision(2) << fraction << ")";
  }
  *summary << "\n";
  return kExitSuccess;
}

int cmd_enumerate(const std::string& system_path, int box) {
  using namespace diophant;
  const LinearSystem sys = parse_system(read_input(system_path));
  const auto points = brute_particulars(sys, box, enumeration_options());
  for (const IntVector& point : points) {
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (j > 0) std::cout << " ";
      std::cout << point[j].str();
    }
    std::cout << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer solutions of linear diophantine equations and systems"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "compute the general integer solution of a system");
  std::string algorithm = "auto";
  solve_cmd->add_option("-a,--algorithm", algorithm,
                        "solver: e1 or e2 (single equation), s1..s5 (systems), auto")
      ->check(CLI::IsMember({"e1", "e2", "s1", "s2", "s3", "s4", "s5", "auto"}));
  std::string input = "-";
  solve_cmd->add_option("-i,--input", input, "input file, or '-' for standard input");
  std::string format = "human";
  solve_cmd->add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  bool with_trace = false;
  solve_cmd->add_flag("-t,--trace", with_trace, "append solver statistics");

  auto* verify_cmd = app.add_subcommand("verify", "check a machine solution document against a system");
  std::string system_path;
  std::string solution_path;
  int verify_box = 10;
  verify_cmd->add_option("-s,--system", system_path, "system file, or '-' for standard input")
      ->required();
  verify_cmd->add_option("--solution", solution_path, "machine-format solution file")->required();
  verify_cmd->add_option("-b,--box", verify_box, "half-width of the exhaustiveness box");

  auto* bench_cmd = app.add_subcommand("bench", "race the two single-equation solvers on random instances");
  diophant::BenchConfig config;
  bench_cmd->add_option("--trials", config.trials, "number of random instances");
  bench_cmd->add_option("--seed", config.seed, "random seed");
  bench_cmd->add_option("--max-n", config.max_n, "largest variable count");
  bench_cmd->add_option("--max-coeff", config.max_coeff, "largest coefficient magnitude");
  std::string bench_output;
  bench_cmd->add_option("-o,--output", bench_output, "write the CSV here instead of standard output");

  auto* enum_cmd = app.add_subcommand("enumerate", "list every integer solution inside a box");
  std::string enum_system;
  int enum_box = 10;
  enum_cmd->add_option("-s,--system", enum_system, "system file, or '-' for standard input")
      ->required();
  enum_cmd->add_option("-b,--box", enum_box, "half-width of the enumeration box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(algorithm, input, format, with_trace);
    if (verify_cmd->parsed()) return cmd_verify(system_path, solution_path, verify_box);
    if (bench_cmd->parsed()) return cmd_bench(config, bench_output);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_system, enum_box);
    return kExitUsage;
  } catch (const diophant::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const diophant::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return enum_cmd->parsed() ? kExitNegative : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
