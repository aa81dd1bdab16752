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

#include "fairwe/population.h"

#include <algorithm>
#include <random>
#include <vector>

#include "fairwe/builtin_examples.h"
#include "fairwe/error.h"
#include "fairwe/random_instance.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace fairwe {
namespace {

using ::testing::ElementsAre;

std::vector<Cell> LendingCells(double mass) {
  return {
      {"0", Group::k0, mass, 0.4, 1.0, 2.0},
      {"1", Group::k0, mass, 0.6, 1.0, 2.0},
      {"0", Group::k1, mass, 0.0, 1.0, 2.0},
      {"1", Group::k1, mass, 1.0, 1.0, 2.0},
  };
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(ValidatePopulation, LendingExample) {
  const Population pop = Population::Validate(LendingCells(0.25));
  ASSERT_EQ(pop.size(), 4u);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_DOUBLE_EQ(pop.threshold(i), 2.0 / 3.0);
  }
  // r = 3 (p - 2/3).
  EXPECT_NEAR(pop.margin(0), -0.8, 1e-15);
  EXPECT_NEAR(pop.margin(1), -0.2, 1e-15);
  EXPECT_NEAR(pop.margin(2), -2.0, 1e-15);
  EXPECT_NEAR(pop.margin(3), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(pop.group_mass(Group::k0), 0.5);
  EXPECT_DOUBLE_EQ(pop.good_rate(Group::k0), 0.5);
  EXPECT_DOUBLE_EQ(pop.good_rate(Group::k1), 0.5);
}

TEST(ValidatePopulation, NormalizesCellOrder) {
  std::vector<Cell> cells = LendingCells(0.25);
  std::reverse(cells.begin(), cells.end());
  const Population pop = Population::Validate(cells);
  EXPECT_THAT(pop.keys(),
              ElementsAre(CellKey{"0", Group::k0}, CellKey{"1", Group::k0},
                          CellKey{"0", Group::k1}, CellKey{"1", Group::k1}));
  EXPECT_EQ(pop.Find(CellKey{"1", Group::k1}), 3u);
  EXPECT_FALSE(pop.Find(CellKey{"2", Group::k1}).has_value());
}

TEST(ValidatePopulation, Errors) {
  EXPECT_EQ(CodeOf([] {
              Population::Validate({{"a", Group::k0, 1.0, 0.5, 1.0, 1.0}});
            }),
            ErrorCode::kEmptyGroup);
  EXPECT_EQ(CodeOf([] { Population::Validate(LendingCells(1.0 / 3.0)); }),
            ErrorCode::kMassNotNormalized);
  EXPECT_EQ(CodeOf([] { Population::Validate({}); }), ErrorCode::kEmptyInput);

  auto mutate = [](auto&& change) {
    std::vector<Cell> cells = LendingCells(0.25);
    change(cells);
    return CodeOf([&] { Population::Validate(cells); });
  };
  EXPECT_EQ(mutate([](auto& c) {
              c[0].mass = -0.25;
              c[1].mass = 0.75;
            }),
            ErrorCode::kNegativeMass);
  EXPECT_EQ(mutate([](auto& c) { c[1].p = 1.5; }),
            ErrorCode::kProbabilityOutOfRange);
  EXPECT_EQ(mutate([](auto& c) { c[2].alpha_plus = 0.0; }),
            ErrorCode::kNonPositiveAlpha);
  EXPECT_EQ(mutate([](auto& c) {
              c[2].alpha_minus = 3.0;
            }),
            ErrorCode::kInconsistentAlphaAcrossGroups);
  EXPECT_EQ(mutate([](auto& c) { c[1].x = "0"; }), ErrorCode::kDuplicateCell);
  // A group whose cells all carry zero mass is empty.
  EXPECT_EQ(mutate([](auto& c) {
              c[2].mass = 0.0;
              c[3].mass = 0.0;
              c[0].mass = 0.5;
              c[1].mass = 0.5;
            }),
            ErrorCode::kEmptyGroup);
}

TEST(ValidatePopulation, ZeroMassCellsAreRetained) {
  std::vector<Cell> cells = LendingCells(0.25);
  cells.push_back({"2", Group::k1, 0.0, 0.9, 1.0, 1.0});
  const Population pop = Population::Validate(cells);
  EXPECT_EQ(pop.size(), 5u);
  EXPECT_EQ(pop.group_cells(Group::k1).size(), 3u);
}

TEST(ValidatePopulation, RenormalizesWithinTolerance) {
  std::vector<Cell> cells = LendingCells(0.25);
  cells[0].mass += 5e-13;
  const Population pop = Population::Validate(cells);
  double total = 0.0;
  for (const Cell& c : pop.cells()) total += c.mass;
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(PopulationProperties, RandomInstances) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Population pop = RandomPopulation(rng);
    double good = 0.0;
    double by_group = 0.0;
    for (Group g : kGroups) {
      double conditional = 0.0;
      for (std::size_t i : pop.group_cells(g)) {
        conditional += pop.conditional_mass(i);
      }
      EXPECT_NEAR(conditional, 1.0, 1e-12);
      by_group += pop.group_mass(g) * pop.good_rate(g);
    }
    for (std::size_t i = 0; i < pop.size(); ++i) {
      good += pop.cell(i).mass * pop.cell(i).p;
      EXPECT_EQ(pop.margin(i) > 0.0, pop.cell(i).p > pop.threshold(i));
    }
    EXPECT_NEAR(good, by_group, 1e-12);
  }
}

TEST(FromSamples, ReproducesLendingExample) {
  // Weights 2 and 3 per cell give repayment rates 0.4 / 0.6 / 0 / 1.
  const std::vector<SampleRow> rows = {
      {"0", Group::k0, 1, 2}, {"0", Group::k0, 0, 3},
      {"1", Group::k0, 1, 3}, {"1", Group::k0, 0, 2},
      {"0", Group::k1, 0, 2}, {"0", Group::k1, 0, 3},
      {"1", Group::k1, 1, 2}, {"1", Group::k1, 1, 3},
  };
  const AlphaTable alphas = {{"0", {1.0, 2.0}}, {"1", {1.0, 2.0}}};
  const Population pop = FromSamples(rows, alphas);
  const Population expected = LendingExample();
  ASSERT_EQ(pop.size(), expected.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_EQ(pop.key(i), expected.key(i));
    EXPECT_NEAR(pop.cell(i).mass, expected.cell(i).mass, 1e-12);
    EXPECT_NEAR(pop.cell(i).p, expected.cell(i).p, 1e-12);
    EXPECT_EQ(pop.cell(i).alpha_plus, expected.cell(i).alpha_plus);
    EXPECT_EQ(pop.cell(i).alpha_minus, expected.cell(i).alpha_minus);
  }
  // Validating the output again changes nothing.
  const Population again = Population::Validate(pop.cells());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_EQ(again.cell(i).mass, pop.cell(i).mass);
    EXPECT_EQ(again.cell(i).p, pop.cell(i).p);
  }
}

TEST(FromSamples, TwoPointDistribution) {
  const std::vector<SampleRow> rows = {{"a", Group::k0, 1, 1},
                                       {"a", Group::k1, 0, 1}};
  const Population pop = FromSamples(rows, {{"a", {1.0, 1.0}}});
  ASSERT_EQ(pop.size(), 2u);
  EXPECT_DOUBLE_EQ(pop.cell(0).mass, 0.5);
  EXPECT_DOUBLE_EQ(pop.cell(0).p, 1.0);
  EXPECT_DOUBLE_EQ(pop.cell(1).p, 0.0);
}

TEST(FromSamples, Errors) {
  const AlphaTable alphas = {{"a", {1.0, 1.0}}};
  const std::vector<SampleRow> zero = {{"a", Group::k0, 1, 0},
                                       {"a", Group::k1, 0, 0}};
  EXPECT_EQ(CodeOf([&] { FromSamples(zero, alphas); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([&] { FromSamples({}, alphas); }), ErrorCode::kEmptyInput);
  const std::vector<SampleRow> unknown = {{"b", Group::k0, 1, 1}};
  EXPECT_EQ(CodeOf([&] { FromSamples(unknown, alphas); }),
            ErrorCode::kMissingAlphaEntry);
  const std::vector<SampleRow> one_group = {{"a", Group::k0, 1, 1}};
  EXPECT_EQ(CodeOf([&] { FromSamples(one_group, alphas); }),
            ErrorCode::kEmptyGroup);
}

std::vector<NumericRow> Scalars(const std::vector<double>& values) {
  std::vector<NumericRow> rows;
  for (double v : values) rows.push_back(NumericRow{{v}, Group::k0, 0, 1.0});
  return rows;
}

std::vector<std::string> Labels(const std::vector<SampleRow>& rows) {
  std::vector<std::string> out;
  for (const SampleRow& r : rows) out.push_back(r.x);
  return out;
}

TEST(BinNumeric, EqualWidth) {
  const std::vector<int> two = {2};
  EXPECT_THAT(Labels(BinNumeric(Scalars({0, 1, 2, 3}), BinScheme::kEqualWidth,
                                two)),
              ElementsAre("b0", "b0", "b1", "b1"));
  const std::vector<int> three = {3};
  EXPECT_THAT(Labels(BinNumeric(Scalars({5, 5, 5}), BinScheme::kEqualWidth,
                                three)),
              ElementsAre("b0", "b0", "b0"));
}

TEST(BinNumeric, QuantileMatchesSortAndSplit) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(100);
  for (double& v : values) v = unit(rng);
  const std::vector<int> four = {4};
  const std::vector<SampleRow> binned =
      BinNumeric(Scalars(values), BinScheme::kQuantile, four);

  // Oracle: sort, split into four runs of 25.
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto l, auto r) { return values[l] < values[r]; });
  std::vector<int> counts(4, 0);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::string expected = "b" + std::to_string(rank / 25);
    EXPECT_EQ(binned[order[rank]].x, expected) << "rank " << rank;
    ++counts[rank / 25];
  }
  EXPECT_THAT(counts, ElementsAre(25, 25, 25, 25));
}

TEST(BinNumeric, WeightedQuantile) {
  // Weights 3,1,1,3: half of the weight is reached at value 2.
  std::vector<NumericRow> rows = Scalars({1, 2, 3, 4});
  rows[0].weight = 3;
  rows[3].weight = 3;
  const std::vector<int> two = {2};
  EXPECT_THAT(Labels(BinNumeric(rows, BinScheme::kQuantile, two)),
              ElementsAre("b0", "b0", "b1", "b1"));
}

TEST(BinNumeric, CompositeLabelsAndErrors) {
  const std::vector<NumericRow> rows = {{{0.0, 10.0}, Group::k0, 1, 1.0},
                                        {{1.0, 0.0}, Group::k1, 0, 2.0}};
  const std::vector<int> bins = {2, 3};
  const std::vector<SampleRow> out =
      BinNumeric(rows, BinScheme::kEqualWidth, bins);
  EXPECT_THAT(Labels(out), ElementsAre("b0_2", "b1_0"));
  EXPECT_EQ(out[1].a, Group::k1);
  EXPECT_EQ(out[1].weight, 2.0);

  const std::vector<int> zero = {0};
  EXPECT_EQ(CodeOf([&] { BinNumeric(rows, BinScheme::kEqualWidth, zero); }),
            ErrorCode::kZeroBins);
  EXPECT_EQ(CodeOf([&] {
              BinNumeric(std::vector<NumericRow>{}, BinScheme::kEqualWidth,
                         bins);
            }),
            ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([] {
              BinNumeric(Scalars({2, 2, 2}), BinScheme::kQuantile,
                         std::vector<int>{3});
            }),
            ErrorCode::kConstantFeatureWithQuantiles);
}

}  // namespace
}  // namespace fairwe
