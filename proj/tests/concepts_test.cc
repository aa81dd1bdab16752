// Copyright 2026 The fairwe Authors.
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

#include "fairwe/concepts.h"

#include <cmath>
#include <random>
#include <vector>

#include "fairwe/analytics.h"
#include "fairwe/builtin_examples.h"
#include "fairwe/random_instance.h"
#include "fairwe/solver.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairwe {
namespace {

using ::fairwe::testing::ErrorCodeOf;

TEST(MakeUtility, DemographicParity) {
  const Population pop = LendingExample();
  const UtilityTable u = MakeUtility(DemographicParity{}, pop);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_EQ(u.value(i, 1), 1.0);
    EXPECT_EQ(u.value(i, 0), 1.0);
  }
  EXPECT_EQ(ConceptName(DemographicParity{}), "demographic_parity");
}

TEST(MakeUtility, EqualOpportunityNormalizesByGroup) {
  const Population pop = LendingExample();
  // P(Y = 1 | A = a) = 1/2 in both groups.
  const UtilityTable u = MakeUtility(EqualOpportunity{}, pop);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_DOUBLE_EQ(u.value(i, 1), 2.0);
    EXPECT_EQ(u.value(i, 0), 0.0);
  }
  const UtilityTable raw = MakeUtility(EqualOpportunity{false}, pop);
  EXPECT_EQ(raw.value(0, 1), 1.0);
}

TEST(MakeUtility, NoGoodBorrowers) {
  const Population pop = Population::Validate({
      {"0", Group::k0, 0.5, 0.5, 1.0, 1.0},
      {"0", Group::k1, 0.5, 0.0, 1.0, 1.0},
  });
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(EqualOpportunity{}, pop); }),
            ErrorCode::kNoGoodBorrowersInGroup);
  // The unnormalized form does not divide and is fine.
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(EqualOpportunity{false}, pop); }),
            std::nullopt);
}

TEST(MakeUtility, EqualizedOddsMember) {
  const Population pop = LendingExample();
  const UtilityTable u = MakeUtility(EqualizedOddsMember{1.0, 0.25}, pop);
  EXPECT_EQ(u.value(2, 1), 1.0);
  EXPECT_EQ(u.value(2, 0), 0.25);
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(EqualizedOddsMember{0.5, 1.0}, pop); }),
            ErrorCode::kInvalidConcept);
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(EqualizedOddsMember{1.0, -1.0}, pop); }),
            ErrorCode::kInvalidConcept);
}

TEST(MakeUtility, HeterogeneousEo) {
  const Population pop = LendingExample();
  HeterogeneousEo het;
  het.amount = {{"0", 1.0}, {"1", 3.0}};
  het.normalized = false;
  const UtilityTable u = MakeUtility(het, pop);
  EXPECT_EQ(u.value(1, 1), 3.0);
  EXPECT_EQ(u.value(1, 0), 0.0);
  het.amount.erase("1");
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(het, pop); }),
            ErrorCode::kInvalidConcept);
}

TEST(MakeUtility, Custom) {
  const Population pop = LendingExample();
  CustomUtility custom;
  for (const CellKey& key : pop.keys()) {
    custom.entries.push_back({key, 1, 2.0});
    custom.entries.push_back({key, 0, 0.5});
  }
  const UtilityTable u = MakeUtility(custom, pop);
  EXPECT_EQ(u.value(3, 1), 2.0);
  EXPECT_EQ(u.value(3, 0), 0.5);

  CustomUtility partial = custom;
  partial.entries.pop_back();
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(partial, pop); }),
            ErrorCode::kUtilityDomainMismatch);
  CustomUtility negative = custom;
  negative.entries[0].value = -1.0;
  EXPECT_EQ(ErrorCodeOf([&] { MakeUtility(negative, pop); }),
            ErrorCode::kNegativeUtility);
}

RawUtility ConstantRaw(const Population& pop, double plus, double minus) {
  RawUtility raw;
  raw.keys = pop.keys();
  raw.plus_good.assign(pop.size(), plus);
  raw.plus_bad.assign(pop.size(), plus);
  raw.minus_good.assign(pop.size(), minus);
  raw.minus_bad.assign(pop.size(), minus);
  return raw;
}

TEST(ShiftToZeroMinus, ConstantUtilities) {
  const Population pop = LendingExample();
  const UtilityTable u = ShiftToZeroMinus(ConstantRaw(pop, 3.0, 1.0), pop);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_EQ(u.value(i, 0), 2.0);
    EXPECT_EQ(u.value(i, 1), 2.0);
  }
}

TEST(ShiftToZeroMinus, UnequalRejectedMeansFail) {
  const Population pop = LendingExample();
  RawUtility raw = ConstantRaw(pop, 3.0, 1.0);
  raw.minus_bad[2] = 0.0;  // group 1 now has E[u_-] = 0.75
  EXPECT_EQ(ErrorCodeOf([&] { ShiftToZeroMinus(raw, pop); }),
            ErrorCode::kZeroClassifierNotWE);
}

TEST(ShiftToZeroMinus, PreservesWelfareGapOnRandomInstances) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int n = 0; n < 100; ++n) {
    const Population pop = RandomPopulation(rng);
    RawUtility raw;
    raw.keys = pop.keys();
    for (std::size_t i = 0; i < pop.size(); ++i) {
      raw.minus_good.push_back(unit(rng));
      raw.minus_bad.push_back(unit(rng));
    }
    // Equalize E[u_- | A] by lifting the poorer group.
    std::array<double, 2> mean{};
    for (Group g : kGroups) {
      for (std::size_t i : pop.group_cells(g)) {
        const double p = pop.cell(i).p;
        mean[Index(g)] += pop.conditional_mass(i) *
                          (raw.minus_good[i] * p + raw.minus_bad[i] * (1 - p));
      }
    }
    const Group low = mean[0] < mean[1] ? Group::k0 : Group::k1;
    const double lift = std::abs(mean[0] - mean[1]);
    for (std::size_t i : pop.group_cells(low)) {
      raw.minus_good[i] += lift;
      raw.minus_bad[i] += lift;
    }
    for (std::size_t i = 0; i < pop.size(); ++i) {
      raw.plus_good.push_back(raw.minus_good[i] + unit(rng));
      raw.plus_bad.push_back(raw.minus_bad[i] + unit(rng));
    }
    const UtilityTable shifted = ShiftToZeroMinus(raw, pop);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> values(pop.size());
      for (double& v : values) v = unit(rng);
      const Classifier c(pop.keys(), values);
      const double raw_gap = RawGroupWelfare(pop, raw, c, Group::k0) -
                             RawGroupWelfare(pop, raw, c, Group::k1);
      const double gap = GroupWelfare(pop, shifted, c, Group::k0) -
                         GroupWelfare(pop, shifted, c, Group::k1);
      EXPECT_NEAR(raw_gap, gap, 1e-9);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 2000);
}

TEST(EoFamily, UnconstrainedLendingClassifierIsNotMember) {
  const Population pop = LendingExample();
  const ThresholdSolution best = SolveUnconstrained(pop);
  const EoFamilyCheck check = IsWeForEoFamily(best.classifier, pop);
  EXPECT_FALSE(check.member);
  EXPECT_DOUBLE_EQ(check.tpr_gap, 1.0);
  EXPECT_DOUBLE_EQ(check.fpr_gap, 0.0);
  EXPECT_TRUE(IsWeForEoFamily(Classifier::Constant(pop, 0.3), pop).member);
}

TEST(EoFamily, UndefinedConditional) {
  const Population pop = Population::Validate({
      {"0", Group::k0, 0.5, 0.5, 1.0, 1.0},
      {"0", Group::k1, 0.5, 1.0, 1.0, 1.0},
  });
  EXPECT_EQ(ErrorCodeOf([&] { IsWeForEoFamily(Classifier::Zero(pop), pop); }),
            ErrorCode::kUndefinedConditional);
  EXPECT_FALSE(ConditionalRate(pop, Classifier::Zero(pop), Group::k1, 0));
}

TEST(EoFamily, NormalizedWelfareIsTruePositiveRate) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const Population pop = RandomPopulation(rng);
    if (!(pop.good_rate(Group::k0) > 0.0 && pop.good_rate(Group::k1) > 0.0)) {
      continue;
    }
    const UtilityTable u = MakeUtility(EqualOpportunity{}, pop);
    std::vector<double> values(pop.size());
    for (double& v : values) v = unit(rng);
    const Classifier c(pop.keys(), values);
    for (Group g : kGroups) {
      EXPECT_NEAR(GroupWelfare(pop, u, c, g),
                  *ConditionalRate(pop, c, g, 1), 1e-12);
    }
  }
}

}  // namespace
}  // namespace fairwe
