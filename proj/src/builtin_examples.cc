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

#include "fairwe/builtin_examples.h"

#include <cmath>

#include "fairwe/analytics.h"
#include "fairwe/concepts.h"
#include "fairwe/error.h"
#include "fairwe/solver.h"

namespace fairwe {
namespace {

Population Grid(const std::vector<std::vector<double>>& p, double alpha_plus,
                double alpha_minus) {
  std::vector<Cell> cells;
  const double mass = 1.0 / (2.0 * p[0].size());
  for (int a = 0; a < 2; ++a) {
    for (std::size_t x = 0; x < p[a].size(); ++x) {
      cells.push_back(Cell{std::to_string(x), GroupFromInt(a), mass, p[a][x],
                           alpha_plus, alpha_minus});
    }
  }
  return Population::Validate(std::move(cells));
}

double At(const Population& pop, const Classifier& c, const char* x, int a) {
  return c[*pop.Find(CellKey{x, GroupFromInt(a)})];
}

class Recorder {
 public:
  Recorder(std::string example, double tol, std::vector<ExampleCheck>& out)
      : example_(std::move(example)), tol_(tol), out_(out) {}

  void Equal(std::string description, double expected, double computed) {
    out_.push_back(ExampleCheck{example_, std::move(description), expected,
                                computed, false,
                                std::abs(expected - computed) <= tol_});
  }
  void Below(std::string description, double bound, double computed) {
    out_.push_back(ExampleCheck{example_, std::move(description), bound,
                                computed, true, computed < bound - tol_});
  }

 private:
  std::string example_;
  double tol_;
  std::vector<ExampleCheck>& out_;
};

void RunLending(double tol, std::vector<ExampleCheck>& out) {
  Recorder rec("ex1", tol, out);
  const Population pop = LendingExample();
  const ThresholdSolution unc = SolveUnconstrained(pop);
  double approved = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) approved += unc.classifier[i];
  rec.Equal("unconstrained approves cell (1,1)", 1.0,
            At(pop, unc.classifier, "1", 1));
  rec.Equal("unconstrained approves exactly one cell", 1.0, approved);
  rec.Equal("unconstrained approvals in group 0", 0.0,
            unc.classifier[0] + unc.classifier[1]);
  rec.Equal("unconstrained revenue", 0.25, unc.revenue);

  const WeSolveResult dp = SolveWe(pop, MakeUtility(DemographicParity{}, pop));
  rec.Equal("WE(DP) revenue", 0.2, dp.revenue);
  rec.Equal("WE(DP) w*", 0.5, dp.w_star);

  const UtilityTable good = MakeUtility(EqualizedOddsMember{1.0, 0.0}, pop);
  const WeSolveResult we = SolveWe(pop, good);
  rec.Equal("WE(u=y) revenue", 0.1, we.revenue);
  rec.Equal("WE(u=y) w*", 0.3, we.w_star);
  rec.Equal("WE(u=y) c(1,1)", 0.6, At(pop, we.classifier, "1", 1));
}

void RunUnawareness(double tol, std::vector<ExampleCheck>& out) {
  Recorder rec("unaware", tol, out);
  const Population pop = UnawarenessExample(0.6);
  const ThresholdSolution unaware = SolveUnaware(pop);
  double approved = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) approved += unaware.classifier[i];
  rec.Equal("unaware approvals (t=3/5)", 0.0, approved);
  rec.Equal("unaware revenue", 0.0, unaware.revenue);
  const UtilityTable dp = MakeUtility(DemographicParity{}, pop);
  rec.Equal("unaware welfare group 0", 0.0,
            GroupWelfare(pop, dp, unaware.classifier, Group::k0));
  rec.Equal("unaware welfare group 1", 0.0,
            GroupWelfare(pop, dp, unaware.classifier, Group::k1));
  // (0,0) and (1,1) are approved without the constraint: 2 * 1/4 * (2/3 - 3/5).
  rec.Equal("unconstrained revenue", 1.0 / 30.0, SolveUnconstrained(pop).revenue);
}

void RunParityHarm(double tol, std::vector<ExampleCheck>& out) {
  Recorder rec("dp_harm", tol, out);
  const Population pop = ParityHarmExample();
  const Classifier unc = SolveUnconstrained(pop).classifier;
  const WeSolveResult dp = SolveWe(pop, MakeUtility(DemographicParity{}, pop));
  double group0 = 0.0;
  for (std::size_t i : pop.group_cells(Group::k0)) group0 += dp.classifier[i];
  rec.Equal("sum_x c_parity(x,0)", 1.0, group0);
  const double before = *ConditionalRate(pop, unc, Group::k0, 1);
  rec.Equal("unconstrained E[c|Y=1,A=0]", 6.0 / 7.0, before);
  rec.Below("parity E[c|Y=1,A=0] below 6/7", 6.0 / 7.0,
            *ConditionalRate(pop, dp.classifier, Group::k0, 1));
  const UtilityTable good = MakeUtility(EqualizedOddsMember{1.0, 0.0}, pop);
  rec.Equal("group 1 unaffected (u=y welfare)",
            GroupWelfare(pop, good, unc, Group::k1),
            GroupWelfare(pop, good, dp.classifier, Group::k1));
}

void RunOpportunityHarm(double tol, std::vector<ExampleCheck>& out) {
  Recorder rec("eo_harm", tol, out);
  const Population pop = OpportunityHarmExample(0.7);
  const UtilityTable ones = MakeUtility(DemographicParity{}, pop);
  const Classifier unc = SolveUnconstrained(pop).classifier;
  rec.Equal("unconstrained welfare group 0 (u=1)", 2.0 / 3.0,
            GroupWelfare(pop, ones, unc, Group::k0));
  rec.Equal("unconstrained welfare group 1 (u=1)", 1.0 / 3.0,
            GroupWelfare(pop, ones, unc, Group::k1));
  const WeSolveResult eo = SolveWe(pop, MakeUtility(EqualOpportunity{}, pop));
  rec.Equal("EO c(0,1)", 6.0 / 7.0, At(pop, eo.classifier, "0", 1));
  rec.Equal("EO welfare group 1 (u=1)", 2.0 / 7.0,
            GroupWelfare(pop, ones, eo.classifier, Group::k1));
}

}  // namespace

Population LendingExample() { return Grid({{0.4, 0.6}, {0.0, 1.0}}, 1.0, 2.0); }

Population UnawarenessExample(double threshold) {
  return Grid({{2.0 / 3.0, 1.0 / 3.0}, {1.0 / 3.0, 2.0 / 3.0}}, 1.0 - threshold,
              threshold);
}

Population ParityHarmExample() {
  return Grid({{0.75, 0.75, 0.25}, {1.0, 0.0, 0.0}}, 2.0, 3.0);
}

Population OpportunityHarmExample(double threshold) {
  return Grid({{0.75, 0.75, 0.25}, {1.0, 0.0, 0.0}}, 1.0 - threshold,
              threshold);
}

Population BuiltinPopulation(std::string_view which) {
  if (which == "ex1") return LendingExample();
  if (which == "unaware") return UnawarenessExample();
  if (which == "dp_harm") return ParityHarmExample();
  if (which == "eo_harm") return OpportunityHarmExample();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown example \"" + std::string(which) + "\"");
}

std::vector<ExampleCheck> RunBuiltinExample(std::string_view which,
                                            double tol) {
  using Runner = void (*)(double, std::vector<ExampleCheck>&);
  static constexpr std::pair<std::string_view, Runner> kRunners[] = {
      {"ex1", RunLending},
      {"unaware", RunUnawareness},
      {"dp_harm", RunParityHarm},
      {"eo_harm", RunOpportunityHarm},
  };
  std::vector<ExampleCheck> out;
  bool known = false;
  for (const auto& [name, run] : kRunners) {
    if (which == "all" || which == name) {
      run(tol, out);
      known = true;
    }
  }
  if (!known) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown example \"" + std::string(which) + "\"");
  }
  return out;
}

}  // namespace fairwe
