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

#ifndef FAIRWE_ANALYTICS_H_
#define FAIRWE_ANALYTICS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fairwe/classifier.h"
#include "fairwe/concepts.h"
#include "fairwe/population.h"
#include "fairwe/solver.h"

namespace fairwe {

// R(c) = sum over cells of mass * r * c.
double Revenue(const Population& pop, const Classifier& c);

// W_{u,c}(a) = sum_x P(x | a) ubar(x, a) c(x, a).
double GroupWelfare(const Population& pop, const UtilityTable& u,
                    const Classifier& c, Group g);

// Fairness residuals of a classifier. Gaps whose conditioning event has
// zero probability are left empty rather than reported as zero.
struct AuditReport {
  double revenue = 0.0;
  std::array<double, 2> group_welfare{};
  double we_gap = 0.0;
  double dp_gap = 0.0;
  std::optional<double> eo_gap;
  std::optional<double> fp_gap;
  std::array<double, 2> approval_rate{};                  // E[c | A = a]
  std::array<std::optional<double>, 2> good_approval_rate;  // E[c | Y=1, A=a]
};

AuditReport Audit(const Population& pop, const UtilityTable& u,
                  const Classifier& c);

// The group with strictly lower welfare (beyond 1e-12) under the
// unconstrained optimum, if any.
std::optional<Group> DisadvantagedGroup(const Population& pop,
                                        const UtilityTable& u);

struct TheoremCheck {
  std::optional<Group> disadvantaged;
  std::array<double, 2> welfare_before{};
  std::array<double, 2> welfare_after{};
  bool welfare_ok = true;
  bool pointwise_ok = true;
  std::vector<CellKey> violating_cells;
};

// Compares the unconstrained and the optimal u-WE classifier: the
// disadvantaged group's welfare must not drop, and none of its cells may
// lose approval (tolerance 1e-9). A false flag signals a solver defect.
TheoremCheck CheckTheorem1(const Population& pop, const UtilityTable& u);

struct RobustnessReport {
  bool applicable = false;
  std::optional<Group> disadvantaged;
  double welfare_before = 0.0;  // true-utility welfare of that group
  double welfare_after = 0.0;
  bool holds = true;
  std::string note;
};

// Imposes WE for u_assumed and measures the disadvantaged group under
// u_true. Applicable only when both utilities name the same disadvantaged
// group.
RobustnessReport CheckRobustness(const Population& pop,
                                 const UtilityTable& u_true,
                                 const UtilityTable& u_assumed);

struct PolicyOutcome {
  double revenue = 0.0;
  std::array<double, 2> welfare{};
  double revenue_drop = 0.0;             // unconstrained minus this policy
  std::array<double, 2> welfare_delta{};  // this policy minus unconstrained
};

struct PriceOfFairness {
  PolicyOutcome unconstrained;
  PolicyOutcome welfare_equalizing;
  PolicyOutcome unaware;
};

// Revenue lost and welfare moved (measured with u) when imposing the
// welfare-equalizing constraint of spec, with Unawareness for comparison.
PriceOfFairness ComputePriceOfFairness(const Population& pop,
                                       const UtilityTable& u,
                                       const ConceptSpec& spec);

}  // namespace fairwe

#endif  // FAIRWE_ANALYTICS_H_
