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

#include "fairwe/analytics.h"

#include <cmath>

namespace fairwe {
namespace {

constexpr double kCompareTolerance = 1e-9;
constexpr double kDisadvantageTolerance = 1e-12;

std::optional<Group> LowerWelfare(const std::array<double, 2>& welfare) {
  if (std::abs(welfare[0] - welfare[1]) <= kDisadvantageTolerance) {
    return std::nullopt;
  }
  return welfare[0] < welfare[1] ? Group::k0 : Group::k1;
}

std::array<double, 2> Welfares(const Population& pop, const UtilityTable& u,
                               const Classifier& c) {
  return {GroupWelfare(pop, u, c, Group::k0),
          GroupWelfare(pop, u, c, Group::k1)};
}

PolicyOutcome Outcome(const Population& pop, const UtilityTable& u,
                      const Classifier& c, const PolicyOutcome* reference) {
  PolicyOutcome out;
  out.revenue = Revenue(pop, c);
  out.welfare = Welfares(pop, u, c);
  if (reference != nullptr) {
    out.revenue_drop = reference->revenue - out.revenue;
    for (int a = 0; a < 2; ++a) {
      out.welfare_delta[a] = out.welfare[a] - reference->welfare[a];
    }
  }
  return out;
}

}  // namespace

double Revenue(const Population& pop, const Classifier& c) {
  RequireDomain(pop, c);
  double total = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    total += pop.cell(i).mass * pop.margin(i) * c[i];
  }
  return total;
}

double GroupWelfare(const Population& pop, const UtilityTable& u,
                    const Classifier& c, Group g) {
  RequireDomain(pop, c);
  RequireDomain(pop, u);
  double total = 0.0;
  for (std::size_t i : pop.group_cells(g)) {
    total += pop.conditional_mass(i) * u.mean(pop, i) * c[i];
  }
  return total;
}

AuditReport Audit(const Population& pop, const UtilityTable& u,
                  const Classifier& c) {
  AuditReport report;
  report.revenue = Revenue(pop, c);
  report.group_welfare = Welfares(pop, u, c);
  report.we_gap = std::abs(report.group_welfare[0] - report.group_welfare[1]);
  for (Group g : kGroups) {
    double rate = 0.0;
    for (std::size_t i : pop.group_cells(g)) {
      rate += pop.conditional_mass(i) * c[i];
    }
    report.approval_rate[Index(g)] = rate;
    report.good_approval_rate[Index(g)] = ConditionalRate(pop, c, g, 1);
  }
  report.dp_gap = std::abs(report.approval_rate[0] - report.approval_rate[1]);
  if (report.good_approval_rate[0] && report.good_approval_rate[1]) {
    report.eo_gap =
        std::abs(*report.good_approval_rate[0] - *report.good_approval_rate[1]);
  }
  auto fp0 = ConditionalRate(pop, c, Group::k0, 0);
  auto fp1 = ConditionalRate(pop, c, Group::k1, 0);
  if (fp0 && fp1) report.fp_gap = std::abs(*fp0 - *fp1);
  return report;
}

std::optional<Group> DisadvantagedGroup(const Population& pop,
                                        const UtilityTable& u) {
  return LowerWelfare(Welfares(pop, u, SolveUnconstrained(pop).classifier));
}

TheoremCheck CheckTheorem1(const Population& pop, const UtilityTable& u) {
  const Classifier before = SolveUnconstrained(pop).classifier;
  const Classifier after = SolveWe(pop, u).classifier;
  TheoremCheck check;
  check.welfare_before = Welfares(pop, u, before);
  check.welfare_after = Welfares(pop, u, after);
  check.disadvantaged = LowerWelfare(check.welfare_before);
  if (!check.disadvantaged) return check;

  const int d = Index(*check.disadvantaged);
  check.welfare_ok =
      check.welfare_after[d] >= check.welfare_before[d] - kCompareTolerance;
  for (std::size_t i : pop.group_cells(*check.disadvantaged)) {
    if (before[i] > after[i] + kCompareTolerance) {
      check.pointwise_ok = false;
      check.violating_cells.push_back(pop.key(i));
    }
  }
  return check;
}

RobustnessReport CheckRobustness(const Population& pop,
                                 const UtilityTable& u_true,
                                 const UtilityTable& u_assumed) {
  RobustnessReport report;
  const auto d_true = DisadvantagedGroup(pop, u_true);
  const auto d_assumed = DisadvantagedGroup(pop, u_assumed);
  if (!d_true || !d_assumed || *d_true != *d_assumed) {
    report.note = "corollary inapplicable";
    return report;
  }
  report.applicable = true;
  report.disadvantaged = d_true;
  report.welfare_before =
      GroupWelfare(pop, u_true, SolveUnconstrained(pop).classifier, *d_true);
  report.welfare_after =
      GroupWelfare(pop, u_true, SolveWe(pop, u_assumed).classifier, *d_true);
  report.holds =
      report.welfare_after >= report.welfare_before - kCompareTolerance;
  report.note = report.holds ? "disadvantaged group weakly better off"
                             : "robustness violated";
  return report;
}

PriceOfFairness ComputePriceOfFairness(const Population& pop,
                                       const UtilityTable& u,
                                       const ConceptSpec& spec) {
  PriceOfFairness out;
  out.unconstrained =
      Outcome(pop, u, SolveUnconstrained(pop).classifier, nullptr);
  out.welfare_equalizing =
      Outcome(pop, u, SolveWe(pop, MakeUtility(spec, pop)).classifier,
              &out.unconstrained);
  out.unaware =
      Outcome(pop, u, SolveUnaware(pop).classifier, &out.unconstrained);
  return out;
}

}  // namespace fairwe
