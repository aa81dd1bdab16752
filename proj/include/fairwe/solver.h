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

#ifndef FAIRWE_SOLVER_H_
#define FAIRWE_SOLVER_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "fairwe/classifier.h"
#include "fairwe/concepts.h"
#include "fairwe/curve.h"
#include "fairwe/population.h"

namespace fairwe {

struct ThresholdSolution {
  Classifier classifier;
  double revenue = 0.0;
};

// Revenue-optimal classifier without constraints: approve exactly the cells
// with p(x, a) > t(x). Knife-edge cells are rejected.
ThresholdSolution SolveUnconstrained(const Population& pop);

// Revenue-optimal classifier that ignores the protected attribute: approve x
// in both groups iff the pooled repayment probability
// sum_a P(A=a | X=x) p(x, a) exceeds t(x).
ThresholdSolution SolveUnaware(const Population& pop);

enum class Algorithm { kCurve, kBisection };

std::string_view AlgorithmName(Algorithm algorithm);

struct TieCell {
  std::size_t index = 0;
  CellKey key;
  double value = 0.0;  // allocated loan probability
};

struct WeSolveResult {
  Classifier classifier;
  double revenue = 0.0;
  double w_star = 0.0;
  std::array<double, 2> welfare{};
  // Per-group thresholds: c = 1 where r > lambda_a ubar, c = 0 where
  // r < lambda_a ubar.
  std::array<double, 2> lambda{};
  std::vector<TieCell> tie_cells;
  Algorithm algorithm = Algorithm::kCurve;
  // Multiplier of the welfare-equality constraint (bisection only).
  double multiplier = 0.0;
};

// Optimal u-welfare-equalizing classifier by exact maximization of
// P(A=0) R_0*(w) + P(A=1) R_1*(w) over the common welfare domain.
//
// Among maximizing welfare levels the largest is chosen. Each group is then
// filled greedily up to w*; at most one segment per group (its cells share a
// ratio) receives a common fractional value. lambda_a is the element of the
// superdifferential of R_a* at w* closest to zero.
WeSolveResult SolveWe(const Population& pop, const UtilityTable& u);

// Same optimum via bisection on the Lagrange multiplier mu of the single
// welfare-equality constraint. Throws kBracketNotFound if no sign change of
// the welfare gap is found within 128 bracket doublings.
WeSolveResult SolveWeBisection(const Population& pop, const UtilityTable& u,
                               double tol = 1e-12);

// Scales the higher-welfare group's loan probabilities down so both groups
// reach the lower welfare exactly. Returned unchanged when both are zero.
Classifier RescaleToExactEquality(const Classifier& c, const Population& pop,
                                  const UtilityTable& u);

}  // namespace fairwe

#endif  // FAIRWE_SOLVER_H_
