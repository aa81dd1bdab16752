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

#ifndef FAIRWE_ORACLE_H_
#define FAIRWE_ORACLE_H_

#include <optional>

#include "fairwe/classifier.h"
#include "fairwe/concepts.h"
#include "fairwe/population.h"

namespace fairwe {

// Classifier values restricted to {0, 1/k, ..., 1}. Welfare equality is
// accepted up to welfare_slack; the default is max over cells of
// P(x|a) ubar(x, a) / k.
struct GridSpec {
  int resolution = 50;
  std::optional<double> welfare_slack;
};

struct OracleSolution {
  Classifier classifier;
  double revenue = 0.0;
};

// Largest number of grid classifiers the oracle will enumerate.
inline constexpr double kMaxOracleEnumeration = 2e8;

// Exhaustive search over grid classifiers of at most 8 cells. The true
// welfare-equalizing optimum lies within L / k of the returned revenue,
// where L = sum of mass * |r|. Among equal revenues the lexicographically
// smallest classifier wins.
OracleSolution BruteForceWe(const Population& pop, const UtilityTable& u,
                            const GridSpec& grid);

// Max of E[r c | A = a] over grid classifiers of group a with
// |W(a) - w| <= slack; -inf when no grid point is close enough.
double BruteForceCurvePoint(const Population& pop, const UtilityTable& u,
                            Group g, double w, const GridSpec& grid);

// L = sum over cells of mass * |r|.
double RevenueLipschitz(const Population& pop);

}  // namespace fairwe

#endif  // FAIRWE_ORACLE_H_
