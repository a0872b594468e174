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
#include <stdexcept>

#include <gtest/gtest.h>

#include "support.hpp"

namespace diophant {
namespace {

using test::application_eq;
using test::application_reference;
using test::homogeneous_eq;
using test::make_system;
using test::non_general_candidate;

TEST(VerifyParticular, ChecksExactly) {
  EXPECT_TRUE(verify_particular(application_eq(), {7, 1, 2, 0}));
  EXPECT_FALSE(verify_particular(application_eq(), {7, 1, 2, 1}));
}

TEST(VerifySymbolic, HoldsForReferenceLattices) {
  EXPECT_TRUE(verify_symbolic(application_eq(), application_reference()));
  EXPECT_TRUE(verify_symbolic(test::sys_2eq_4var(), test::sys_2eq_4var_reference()));
  EXPECT_TRUE(verify_symbolic(test::sys_3eq_5var(), test::sys_3eq_5var_reference()));
  EXPECT_TRUE(verify_symbolic(test::sys_2eq_5var_mixed(), test::sys_2eq_5var_mixed_reference()));
  EXPECT_TRUE(verify_symbolic(homogeneous_eq(), non_general_candidate()));
}

TEST(VerifySymbolic, RejectsWrongOffset) {
  GeneralSolution off = application_reference();
  off.d[0] += 1;
  EXPECT_FALSE(verify_symbolic(application_eq(), off));
}

TEST(VerifySymbolic, RejectsWrongColumn) {
  GeneralSolution off = application_reference();
  off.c[0][0] += 1;
  EXPECT_FALSE(verify_symbolic(application_eq(), off));
}

TEST(VerifySymbolic, ThrowsOnVariableMismatch) {
  const GeneralSolution other({"a", "b"}, {{1}, {0}}, {0, 0});
  EXPECT_THROW(verify_symbolic(make_system({"x", "y"}, {{1, 1}}, {0}), other),
               std::invalid_argument);
}

TEST(Membership, RecoversParameters) {
  const auto k = membership(test::sys_2eq_4var_reference(), {5, 1, 54, 16});
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, (IntVector{1, 0}));
}

TEST(Membership, RejectsOffLatticePoint) {
  EXPECT_FALSE(membership(test::sys_2eq_4var_reference(), {5, 1, 54, 17}).has_value());
}

TEST(Membership, PointLatticeMatchesOnlyItsPoint) {
  const GeneralSolution point({"x", "y"}, {{}, {}}, {3, -4});
  EXPECT_TRUE(membership(point, {3, -4}).has_value());
  EXPECT_FALSE(membership(point, {3, -3}).has_value());
}

TEST(LatticeMembershipClass, AgreesWithFreeFunction) {
  const GeneralSolution gs = test::sys_2eq_5var_mixed_reference();
  const LatticeMembership fast(gs);
  for (const Integer& k1 : {Integer(-2), Integer(0), Integer(3)}) {
    for (const Integer& k2 : {Integer(-1), Integer(2)}) {
      const IntVector x = substitute(gs, {k1, k2, 5});
      const auto got = fast.solve(x);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, (IntVector{k1, k2, 5}));
    }
  }
  EXPECT_FALSE(fast.solve({1, 1, 1, 1, 1}).has_value());
}

TEST(BruteParticulars, LexicographicAndComplete) {
  const auto pts = brute_particulars(make_system({"x", "y"}, {{1, 1}}, {1}), 1);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (IntVector{0, 1}));
  EXPECT_EQ(pts[1], (IntVector{1, 0}));
}

TEST(BruteParticulars, EmptyWhenOutOfBox) {
  EXPECT_TRUE(brute_particulars(make_system({"x"}, {{1}}, {5}), 2).empty());
}

TEST(BruteParticulars, HomogeneousCountIsOddAndContainsOrigin) {
  const auto pts = brute_particulars(homogeneous_eq(), 10);
  EXPECT_EQ(pts.size(), 33u);
  EXPECT_NE(std::find(pts.begin(), pts.end(), IntVector{0, 0, 0}), pts.end());
  EXPECT_NE(std::find(pts.begin(), pts.end(), IntVector{1, 7, 2}), pts.end());
}

TEST(BruteParticulars, RefusesOverBudget) {
  EXPECT_THROW(brute_particulars(test::sys_3eq_5var(), 10), BudgetExceeded);
  EnumerationOptions opts;
  opts.budget = 2;
  EXPECT_THROW(brute_particulars(make_system({"x", "y"}, {{1, 1}}, {1}), 1, opts),
               BudgetExceeded);
}

TEST(IsGeneralOnBox, AcceptsReferenceLattice) {
  const BoxCheck check = is_general_on_box(application_eq(), application_reference(), 10);
  EXPECT_TRUE(check.general);
  EXPECT_TRUE(check.counterexample.empty());
}

TEST(IsGeneralOnBox, RejectsSoundButNonGeneralLattice) {
  const BoxCheck check = is_general_on_box(homogeneous_eq(), non_general_candidate(), 10);
  EXPECT_FALSE(check.general);
  ASSERT_FALSE(check.counterexample.empty());
  // The witness really solves the equation and really misses the lattice.
  EXPECT_TRUE(verify_particular(homogeneous_eq(), check.counterexample));
  EXPECT_FALSE(membership(non_general_candidate(), check.counterexample).has_value());
}

TEST(IsGeneralOnBox, RequiresSymbolicSoundness) {
  const GeneralSolution unsound({"x", "y"}, {{1}, {0}}, {0, 0});
  EXPECT_THROW(is_general_on_box(make_system({"x", "y"}, {{1, 1}}, {1}), unsound, 2),
               std::invalid_argument);
}

TEST(EquivalentOnBox, LatticeEqualsItself) {
  EXPECT_TRUE(equivalent_on_box(application_eq(), application_reference(),
                                application_reference(), 10));
}

TEST(EquivalentOnBox, DetectsNonGeneralCandidate) {
  // A lattice that misses box points is not equivalent to anything, itself
  // included: the operational definition demands both sides be general.
  EXPECT_FALSE(equivalent_on_box(homogeneous_eq(), non_general_candidate(),
                                 non_general_candidate(), 10));
}

TEST(StructureChecks, AllApplicableAndPassingOnCandidate) {
  const StructureReport report = structure_checks(homogeneous_eq(), non_general_candidate());
  EXPECT_TRUE(report.all_passed());
  ASSERT_EQ(report.checks.size(), 3u);
  for (const CheckResult& check : report.checks) {
    EXPECT_TRUE(check.applicable) << check.name;
    EXPECT_TRUE(check.passed) << check.name;
  }
}

TEST(StructureChecks, InhomogeneousSkipsHomogeneousChecks) {
  const StructureReport report = structure_checks(application_eq(), application_reference());
  EXPECT_TRUE(report.all_passed());
  int applicable = 0;
  for (const CheckResult& check : report.checks) applicable += check.applicable ? 1 : 0;
  EXPECT_EQ(applicable, 1);  // only the rank check applies
}

TEST(StructureChecks, DetectsRankDeficit) {
  // One column too few: rank C != n - rank A.
  const GeneralSolution thin({"x1", "x2", "x3"}, {{1}, {9}, {3}}, {0, 0, 0});
  const StructureReport report = structure_checks(homogeneous_eq(), thin);
  EXPECT_FALSE(report.all_passed());
}

}  // namespace
}  // namespace diophant
