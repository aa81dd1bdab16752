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

#ifndef FAIRWE_RANDOM_INSTANCE_H_
#define FAIRWE_RANDOM_INSTANCE_H_

#include <random>
#include <string_view>

#include "fairwe/concepts.h"
#include "fairwe/population.h"

namespace fairwe {

// Seeded instance generator shared by the property suites and the CLI
// self-check. All draws are uniform:
//   cells per group   integer in [min_cells, max_cells], labels "x0", "x1", ...
//   p(x, a)           [0, 1]
//   alpha_+, alpha_-  [alpha_lo, alpha_hi], one pair per label
//   raw cell weight   [weight_lo, weight_hi], then normalized to mass
struct RandomPopulationOptions {
  int min_cells = 1;
  int max_cells = 5;
  double alpha_lo = 0.5;
  double alpha_hi = 2.0;
  double weight_lo = 0.05;
  double weight_hi = 1.0;
};

Population RandomPopulation(std::mt19937_64& rng,
                            const RandomPopulationOptions& options = {});

enum class UtilityKind { kDemographicParity, kEqualOpportunity, kGoodOnly, kRandom };

std::string_view UtilityKindName(UtilityKind kind);

// kRandom draws every u(x, a, y) uniformly from [0, 2].
UtilityTable DrawUtility(std::mt19937_64& rng, const Population& pop,
                         UtilityKind kind);

}  // namespace fairwe

#endif  // FAIRWE_RANDOM_INSTANCE_H_
