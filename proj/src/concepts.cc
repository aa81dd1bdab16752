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
#include <set>

#include "fairwe/error.h"

namespace fairwe {
namespace {

constexpr double kWelfareTolerance = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Group-normalized "good borrower" utility: u(x, a, 1) = m(x) / E[m Y | A=a].
UtilityTable NormalizedGoodUtility(const Population& pop,
                                   const std::vector<double>& amount,
                                   bool normalized) {
  std::array<double, 2> scale = {1.0, 1.0};
  if (normalized) {
    for (Group g : kGroups) {
      double denom = 0.0;
      for (std::size_t i : pop.group_cells(g)) {
        denom += pop.conditional_mass(i) * amount[i] * pop.cell(i).p;
      }
      if (!(denom > 0.0)) {
        throw Error(ErrorCode::kNoGoodBorrowersInGroup,
                    "group " + std::to_string(Index(g)));
      }
      scale[Index(g)] = 1.0 / denom;
    }
  }
  std::vector<double> good(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    good[i] = amount[i] * scale[Index(pop.cell(i).a)];
  }
  return UtilityTable(pop.keys(), std::move(good),
                      std::vector<double>(pop.size(), 0.0));
}

void CheckRawDomain(const RawUtility& raw, const Population& pop) {
  const std::size_t n = pop.size();
  if (raw.keys != pop.keys() || raw.plus_good.size() != n ||
      raw.plus_bad.size() != n || raw.minus_good.size() != n ||
      raw.minus_bad.size() != n) {
    throw Error(ErrorCode::kUtilityDomainMismatch,
                "raw utility cells do not match the population");
  }
}

double RawMinusMean(const Population& pop, const RawUtility& raw, Group g) {
  double total = 0.0;
  for (std::size_t i : pop.group_cells(g)) {
    const double p = pop.cell(i).p;
    total += pop.conditional_mass(i) *
             (raw.minus_good[i] * p + raw.minus_bad[i] * (1.0 - p));
  }
  return total;
}

}  // namespace

UtilityTable::UtilityTable(std::vector<CellKey> keys, std::vector<double> good,
                           std::vector<double> bad)
    : keys_(std::move(keys)), good_(std::move(good)), bad_(std::move(bad)) {
  if (good_.size() != keys_.size() || bad_.size() != keys_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "utility columns differ in length");
  }
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (!(good_[i] >= 0.0) || !(bad_[i] >= 0.0)) {
      throw Error(ErrorCode::kNegativeUtility, ToString(keys_[i]));
    }
  }
}

UtilityTable UtilityTable::Constant(const Population& pop, double good,
                                    double bad) {
  return UtilityTable(pop.keys(), std::vector<double>(pop.size(), good),
                      std::vector<double>(pop.size(), bad));
}

double UtilityTable::group_mean(const Population& pop, Group g) const {
  double total = 0.0;
  for (std::size_t i : pop.group_cells(g)) {
    total += pop.conditional_mass(i) * mean(pop, i);
  }
  return total;
}

bool UtilityTable::Matches(const Population& pop) const {
  if (keys_.size() != pop.size()) return false;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] != pop.key(i)) return false;
  }
  return true;
}

void RequireDomain(const Population& pop, const UtilityTable& u) {
  if (!u.Matches(pop)) {
    throw Error(ErrorCode::kUtilityDomainMismatch,
                "utility table cells do not match the population");
  }
}

std::string ConceptName(const ConceptSpec& spec) {
  return std::visit(
      Overloaded{
          [](const DemographicParity&) -> std::string {
            return "demographic_parity";
          },
          [](const EqualOpportunity& eo) -> std::string {
            return eo.normalized ? "equal_opportunity"
                                 : "equal_opportunity_unnormalized";
          },
          [](const EqualizedOddsMember&) -> std::string {
            return "equalized_odds_member";
          },
          [](const HeterogeneousEo&) -> std::string {
            return "heterogeneous_eo";
          },
          [](const CustomUtility&) -> std::string { return "custom"; },
      },
      spec);
}

UtilityTable MakeUtility(const ConceptSpec& spec, const Population& pop) {
  return std::visit(
      Overloaded{
          [&](const DemographicParity&) {
            return UtilityTable::Constant(pop, 1.0, 1.0);
          },
          [&](const EqualOpportunity& eo) {
            return NormalizedGoodUtility(
                pop, std::vector<double>(pop.size(), 1.0), eo.normalized);
          },
          [&](const EqualizedOddsMember& eo) {
            if (!(eo.alpha >= eo.beta && eo.beta >= 0.0)) {
              throw Error(ErrorCode::kInvalidConcept,
                          "equalized_odds_member requires alpha >= beta >= 0");
            }
            return UtilityTable::Constant(pop, eo.alpha, eo.beta);
          },
          [&](const HeterogeneousEo& het) {
            std::vector<double> amount(pop.size());
            for (std::size_t i = 0; i < pop.size(); ++i) {
              auto it = het.amount.find(pop.cell(i).x);
              if (it == het.amount.end() || !(it->second > 0.0)) {
                throw Error(ErrorCode::kInvalidConcept,
                            "heterogeneous_eo needs m(x) > 0 for x=" +
                                pop.cell(i).x);
              }
              amount[i] = it->second;
            }
            return NormalizedGoodUtility(pop, amount, het.normalized);
          },
          [&](const CustomUtility& custom) {
            std::vector<double> good(pop.size());
            std::vector<double> bad(pop.size());
            std::set<std::pair<std::size_t, int>> seen;
            for (const CustomEntry& e : custom.entries) {
              auto i = pop.Find(e.key);
              if (!i || (e.y != 0 && e.y != 1)) {
                throw Error(ErrorCode::kUtilityDomainMismatch,
                            "custom utility entry " + ToString(e.key));
              }
              if (!seen.emplace(*i, e.y).second) {
                throw Error(ErrorCode::kInvalidConcept,
                            "duplicate custom utility entry " +
                                ToString(e.key));
              }
              (e.y ? good : bad)[*i] = e.value;
            }
            if (seen.size() != 2 * pop.size()) {
              throw Error(ErrorCode::kUtilityDomainMismatch,
                          "custom utility must cover every (x, a, y)");
            }
            return UtilityTable(pop.keys(), std::move(good), std::move(bad));
          },
      },
      spec);
}

UtilityTable ShiftToZeroMinus(const RawUtility& raw, const Population& pop) {
  CheckRawDomain(raw, pop);
  const double m0 = RawMinusMean(pop, raw, Group::k0);
  const double m1 = RawMinusMean(pop, raw, Group::k1);
  if (std::abs(m0 - m1) > kWelfareTolerance) {
    throw Error(ErrorCode::kZeroClassifierNotWE,
                "E[u_-|A=0] = " + std::to_string(m0) +
                    " differs from E[u_-|A=1] = " + std::to_string(m1));
  }
  std::vector<double> good(pop.size());
  std::vector<double> bad(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    good[i] = raw.plus_good[i] - raw.minus_good[i];
    bad[i] = raw.plus_bad[i] - raw.minus_bad[i];
  }
  return UtilityTable(pop.keys(), std::move(good), std::move(bad));
}

double RawGroupWelfare(const Population& pop, const RawUtility& raw,
                       const Classifier& c, Group g) {
  CheckRawDomain(raw, pop);
  RequireDomain(pop, c);
  double total = 0.0;
  for (std::size_t i : pop.group_cells(g)) {
    const double p = pop.cell(i).p;
    const double plus = raw.plus_good[i] * p + raw.plus_bad[i] * (1.0 - p);
    const double minus = raw.minus_good[i] * p + raw.minus_bad[i] * (1.0 - p);
    total += pop.conditional_mass(i) * (plus * c[i] + minus * (1.0 - c[i]));
  }
  return total;
}

std::optional<double> ConditionalRate(const Population& pop,
                                      const Classifier& c, Group g, int y) {
  RequireDomain(pop, c);
  double joint = 0.0;
  double approved = 0.0;
  for (std::size_t i : pop.group_cells(g)) {
    const double p = pop.cell(i).p;
    const double weight = pop.cell(i).mass * (y ? p : 1.0 - p);
    joint += weight;
    approved += weight * c[i];
  }
  if (!(joint > 0.0)) return std::nullopt;
  return approved / joint;
}

EoFamilyCheck IsWeForEoFamily(const Classifier& c, const Population& pop) {
  std::array<double, 2> gap{};
  for (int y : {1, 0}) {
    auto r0 = ConditionalRate(pop, c, Group::k0, y);
    auto r1 = ConditionalRate(pop, c, Group::k1, y);
    if (!r0 || !r1) {
      throw Error(ErrorCode::kUndefinedConditional,
                  "P(Y=" + std::to_string(y) + "|A=a) is zero for some group");
    }
    gap[y] = std::abs(*r0 - *r1);
  }
  EoFamilyCheck check;
  check.tpr_gap = gap[1];
  check.fpr_gap = gap[0];
  check.member =
      check.tpr_gap <= kWelfareTolerance && check.fpr_gap <= kWelfareTolerance;
  return check;
}

}  // namespace fairwe
