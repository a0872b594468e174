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

// Top-level acceptance run. Each criterion prints one verdict line; the
// criteria execute in order inside one process because the later ones audit
// every solution the earlier ones produced.

#include <algorithm>
#include <exception>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gtest/gtest.h>

#include "diophant/bench.hpp"
#include "diophant/equation_solvers.hpp"
#include "diophant/model.hpp"
#include "diophant/oracle.hpp"
#include "diophant/system_solvers.hpp"
#include "diophant/textio.hpp"
#include "support.hpp"

namespace diophant {
namespace {

// Prints the verdict line for one criterion when the test body ends, whether
// normally, by assertion exit, or by exception unwind.
struct CriterionBanner {
  int id;
  explicit CriterionBanner(int id_in) : id(id_in) {}
  ~CriterionBanner() {
    const bool failed = ::testing::Test::HasFailure() || std::uncaught_exceptions() > 0;
    std::cout << "ACCEPTANCE CRITERION " << id << ": " << (failed ? "FAIL" : "PASS")
              << std::endl;
  }
};

// Every solution produced by criteria 1 to 5, audited again by criterion 6.
std::vector<std::pair<LinearSystem, GeneralSolution>>& produced() {
  static std::vector<std::pair<LinearSystem, GeneralSolution>> entries;
  return entries;
}

// Every refusal produced by criteria 1 to 5, audited by criterion 7.
std::vector<NoSolution>& refusals() {
  static std::vector<NoSolution> entries;
  return entries;
}

// The criterion-5 system corpus with the solvers' common verdict, reused by
// criterion 7.
struct CorpusEntry {
  LinearSystem sys;
  bool solved = false;
};
std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries;
  return entries;
}

void record(const LinearSystem& sys, const SolveOutcome& outcome) {
  if (const auto* gs = std::get_if<GeneralSolution>(&outcome)) {
    produced().push_back({sys, *gs});
  } else {
    refusals().push_back(std::get<NoSolution>(outcome));
  }
}

TEST(Acceptance, Criterion1) {
  CriterionBanner banner(1);
  const LinearSystem eq = test::application_eq();
  const SolveResult result = solve_eq_gcd(eq);
  const auto* gs = std::get_if<GeneralSolution>(&result.outcome);
  ASSERT_NE(gs, nullptr);
  record(eq, result.outcome);
  EXPECT_EQ(gs->num_params(), 3);
  EXPECT_TRUE(equivalent_on_box(eq, *gs, test::application_reference(), 10));
}

TEST(Acceptance, Criterion2) {
  CriterionBanner banner(2);
  const LinearSystem eq = test::congruence_eq();
  const SolveResult result = solve_eq_congruence(eq);
  const auto* gs = std::get_if<GeneralSolution>(&result.outcome);
  ASSERT_NE(gs, nullptr);
  record(eq, result.outcome);
  EXPECT_EQ(gs->num_params(), 2);
  EXPECT_EQ(result.trace.iterations, 2);
  EXPECT_TRUE(equivalent_on_box(eq, *gs, test::congruence_reference(), 10));
}

TEST(Acceptance, Criterion3) {
  CriterionBanner banner(3);
  EnumerationOptions wide;
  wide.budget = 100'000'000;  // box 10 over five variables needs ~2e7 steps

  struct RegressionCase {
    LinearSystem sys;
    SolveResult result;
    const GeneralSolution* reference;  // null: self-verification at box 8
  };
  const GeneralSolution ref_2x4 = test::sys_2eq_4var_reference();
  const GeneralSolution ref_3x5 = test::sys_3eq_5var_reference();
  const GeneralSolution ref_mixed = test::sys_2eq_5var_mixed_reference();
  std::vector<RegressionCase> cases;
  cases.push_back({test::sys_2eq_4var(), solve_sys_substitution(test::sys_2eq_4var()), &ref_2x4});
  cases.push_back({test::sys_4eq_4var_degenerate(),
                   solve_sys_elim(test::sys_4eq_4var_degenerate()), nullptr});
  cases.push_back({test::sys_3eq_5var(), solve_sys_fraction(test::sys_3eq_5var()), &ref_3x5});
  cases.push_back({test::sys_2eq_5var_sparse(),
                   solve_sys_modpivot(test::sys_2eq_5var_sparse()), nullptr});
  cases.push_back(
      {test::sys_2eq_5var_mixed(), solve_sys_hybrid(test::sys_2eq_5var_mixed()), &ref_mixed});

  for (const RegressionCase& c : cases) {
    const auto* gs = std::get_if<GeneralSolution>(&c.result.outcome);
    ASSERT_NE(gs, nullptr) << render_system(c.sys);
    record(c.sys, c.result.outcome);
    if (c.reference != nullptr) {
      EXPECT_TRUE(equivalent_on_box(c.sys, *gs, *c.reference, 10, wide)) << render_system(c.sys);
    } else {
      EXPECT_TRUE(verify_symbolic(c.sys, *gs)) << render_system(c.sys);
      EXPECT_TRUE(structure_checks(c.sys, *gs).all_passed()) << render_system(c.sys);
      EXPECT_TRUE(is_general_on_box(c.sys, *gs, 8, wide).general) << render_system(c.sys);
    }
  }
}

TEST(Acceptance, Criterion4) {
  CriterionBanner banner(4);
  const LinearSystem eq = test::homogeneous_eq();
  const GeneralSolution candidate = test::non_general_candidate();

  // The candidate passes every algebraic filter...
  EXPECT_TRUE(verify_symbolic(eq, candidate));
  const StructureReport report = structure_checks(eq, candidate);
  ASSERT_EQ(report.checks.size(), 3u);
  for (const CheckResult& check : report.checks) {
    EXPECT_TRUE(check.applicable) << check.name;
    EXPECT_TRUE(check.passed) << check.name;
  }

  // ...yet the box enumeration finds an unreachable solution.
  const BoxCheck box = is_general_on_box(eq, candidate, 10);
  EXPECT_FALSE(box.general);
  ASSERT_FALSE(box.counterexample.empty());
  EXPECT_TRUE(verify_particular(eq, box.counterexample));
  EXPECT_FALSE(membership(candidate, box.counterexample).has_value());

  const auto points = brute_particulars(eq, 10);
  EXPECT_NE(std::find(points.begin(), points.end(), IntVector{1, 7, 2}), points.end());
}

TEST(Acceptance, Criterion5) {
  CriterionBanner banner(5);

  // 200 seeded systems, half solvable by construction, half free.
  std::mt19937_64 sys_rng(1);
  for (int i = 0; i < 200; ++i) {
    const LinearSystem sys = test::random_system(sys_rng, 3, 5, 9, i % 2 == 0);
    std::vector<SolveResult> results;
    results.reserve(5);
    results.push_back(solve_sys_substitution(sys));
    results.push_back(solve_sys_elim(sys));
    results.push_back(solve_sys_fraction(sys));
    results.push_back(solve_sys_modpivot(sys));
    results.push_back(solve_sys_hybrid(sys));

    const bool solved = std::holds_alternative<GeneralSolution>(results[0].outcome);
    bool agree = true;
    for (const SolveResult& r : results) {
      agree = agree && std::holds_alternative<GeneralSolution>(r.outcome) == solved;
    }
    EXPECT_TRUE(agree) << "solvability disagreement on:\n" << render_system(sys);
    corpus().push_back({sys, solved && agree});
    for (const SolveResult& r : results) record(sys, r.outcome);
    if (!solved || !agree) continue;

    // Box equivalence through one shared enumeration.
    const auto points = brute_particulars(sys, 6);
    const int p0 = std::get<GeneralSolution>(results[0].outcome).num_params();
    for (const SolveResult& r : results) {
      const auto& gs = std::get<GeneralSolution>(r.outcome);
      EXPECT_EQ(gs.num_params(), p0) << render_system(sys);
      const LatticeMembership member(gs);
      for (const IntVector& point : points) {
        EXPECT_TRUE(member.solve(point).has_value())
            << "missed box solution on:\n" << render_system(sys);
      }
    }
  }

  // 500 seeded equations for the two single-equation engines.
  std::mt19937_64 eq_rng(2);
  for (int i = 0; i < 500; ++i) {
    const LinearSystem eq = test::random_equation(eq_rng, 4, 20);
    const SolveResult r1 = solve_eq_gcd(eq);
    const SolveResult r2 = solve_eq_congruence(eq);
    record(eq, r1.outcome);
    record(eq, r2.outcome);
    const bool s1 = std::holds_alternative<GeneralSolution>(r1.outcome);
    const bool s2 = std::holds_alternative<GeneralSolution>(r2.outcome);
    EXPECT_EQ(s1, s2) << render_system(eq);
    if (!s1 || !s2) continue;
    const auto points = brute_particulars(eq, 5);
    for (const SolveResult* r : {&r1, &r2}) {
      const auto& gs = std::get<GeneralSolution>(r->outcome);
      const LatticeMembership member(gs);
      for (const IntVector& point : points) {
        EXPECT_TRUE(member.solve(point).has_value())
            << "missed box solution on:\n" << render_system(eq);
      }
    }
    EXPECT_EQ(std::get<GeneralSolution>(r1.outcome).num_params(),
              std::get<GeneralSolution>(r2.outcome).num_params())
        << render_system(eq);
  }
}

TEST(Acceptance, Criterion6) {
  CriterionBanner banner(6);
  ASSERT_FALSE(produced().empty()) << "criteria 1-5 must run first";
  for (const auto& [sys, gs] : produced()) {
    // A C = 0 and A d = b.
    EXPECT_TRUE(verify_symbolic(sys, gs)) << render_system(sys);
    // rank C = p = n - rank A.
    const int p = gs.num_params();
    EXPECT_EQ(rational_rank(gs.c), p) << render_system(sys);
    EXPECT_EQ(p, sys.num_vars() - rational_rank(sys.a)) << render_system(sys);
    // Homogeneous inputs: zero offset; plus the column-gcd and row-gcd facts
    // where they apply.
    const bool homogeneous =
        std::all_of(sys.b.begin(), sys.b.end(), [](const Integer& b) { return b == 0; });
    if (homogeneous) {
      for (const Integer& entry : gs.d) EXPECT_EQ(entry, 0) << render_system(sys);
    }
    EXPECT_TRUE(structure_checks(sys, gs).all_passed()) << render_system(sys);
  }
}

TEST(Acceptance, Criterion7) {
  CriterionBanner banner(7);
  ASSERT_FALSE(corpus().empty()) << "criterion 5 must run first";

  int guaranteed = 0;
  for (const CorpusEntry& entry : corpus()) {
    if (rational_rank(entry.sys.a) != entry.sys.num_equations()) continue;
    const FeasibilityVerdict verdict = feasibility_cramer(entry.sys);
    if (verdict.status == Feasibility::Guaranteed) {
      ++guaranteed;
      EXPECT_TRUE(entry.solved) << "guaranteed but unsolved:\n" << render_system(entry.sys);
      if (verdict.evidence.has_value()) {
        for (const Integer& col_delta : verdict.evidence->col_deltas) {
          EXPECT_EQ(col_delta % verdict.evidence->delta, 0);
        }
      }
    } else if (verdict.status == Feasibility::Infeasible) {
      EXPECT_FALSE(entry.solved) << "infeasible but solved:\n" << render_system(entry.sys);
    }
  }
  EXPECT_GT(guaranteed, 0) << "the corpus never exercised the divisibility criterion";

  int gcd_witnessed = 0;
  for (const NoSolution& no : refusals()) {
    Integer gcd_value = 0;
    Integer rhs = 0;
    bool has_gcd = false;
    bool has_rhs = false;
    for (const auto& [key, value] : no.witness) {
      if (key == "gcd") {
        gcd_value = value;
        has_gcd = true;
      } else if (key == "b") {
        rhs = value;
        has_rhs = true;
      }
    }
    if (!has_gcd) continue;
    ++gcd_witnessed;
    ASSERT_TRUE(has_rhs);
    EXPECT_GE(gcd_value, 2);
    EXPECT_NE(rhs % gcd_value, 0) << "witness does not divide as claimed";
  }
  EXPECT_GT(gcd_witnessed, 0) << "the corpus never produced a gcd refusal";
}

TEST(Acceptance, Criterion8) {
  CriterionBanner banner(8);
  BenchConfig config;  // seed 1, 100 trials, n up to 4, coefficients up to 30
  const BenchReport first = run_bench(config);
  const BenchReport second = run_bench(config);
  ASSERT_EQ(first.rows.size(), 100u);
  const std::string csv = bench_csv(first.rows);
  EXPECT_EQ(csv, bench_csv(second.rows));
  EXPECT_EQ(csv.rfind("instance_id,n,e1_iterations,e2_iterations,e1_peak_coeff,e2_peak_coeff\n",
                      0),
            0u);
  // Reported, not asserted: neither engine dominates by design.
  const double fraction = first.congruence_not_worse / 100.0;
  std::cout << "criterion 8 report: congruence rounds <= gcd-descent rounds on "
            << first.congruence_not_worse << " of 100 instances (fraction " << std::fixed
            << std::setprecision(2) << fraction << ")\n";
}

}  // namespace
}  // namespace diophant
