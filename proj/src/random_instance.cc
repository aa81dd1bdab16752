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

#include "fairwe/random_instance.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace fairwe {

Population RandomPopulation(std::mt19937_64& rng,
                            const RandomPopulationOptions& options) {
  std::uniform_int_distribution<int> count(options.min_cells,
                                           options.max_cells);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> alpha(options.alpha_lo,
                                               options.alpha_hi);
  std::uniform_real_distribution<double> weight(options.weight_lo,
                                                options.weight_hi);
  const int n0 = count(rng);
  const int n1 = count(rng);
  std::vector<AlphaPair> alphas(std::max(n0, n1));
  for (AlphaPair& pair : alphas) {
    pair.alpha_plus = alpha(rng);
    pair.alpha_minus = alpha(rng);
  }
  std::vector<Cell> cells;
  for (int a = 0; a < 2; ++a) {
    for (int x = 0; x < (a == 0 ? n0 : n1); ++x) {
      cells.push_back(Cell{"x" + std::to_string(x), GroupFromInt(a),
                           weight(rng), unit(rng), alphas[x].alpha_plus,
                           alphas[x].alpha_minus});
    }
  }
  const double total = std::accumulate(
      cells.begin(), cells.end(), 0.0,
      [](double acc, const Cell& c) { return acc + c.mass; });
  for (Cell& c : cells) c.mass /= total;
  return Population::Validate(std::move(cells));
}

std::string_view UtilityKindName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kDemographicParity:
      return "DP";
    case UtilityKind::kEqualOpportunity:
      return "EO";
    case UtilityKind::kGoodOnly:
      return "u=y";
    case UtilityKind::kRandom:
      return "random";
  }
  return "?";
}

UtilityTable DrawUtility(std::mt19937_64& rng, const Population& pop,
                         UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kDemographicParity:
      return MakeUtility(DemographicParity{}, pop);
    case UtilityKind::kEqualOpportunity:
      return MakeUtility(EqualOpportunity{}, pop);
    case UtilityKind::kGoodOnly:
      return MakeUtility(EqualizedOddsMember{1.0, 0.0}, pop);
    case UtilityKind::kRandom:
      break;
  }
  std::uniform_real_distribution<double> value(0.0, 2.0);
  std::vector<double> good(pop.size());
  std::vector<double> bad(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    good[i] = value(rng);
    bad[i] = value(rng);
  }
  return UtilityTable(pop.keys(), std::move(good), std::move(bad));
}

}  // namespace fairwe
